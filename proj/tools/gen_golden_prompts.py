# Copyright 2026 The SDTK Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Renders every prompt template with Python str.format into tests/golden/prompts."""

import argparse
import json
import pathlib


def main() -> None:
    root = pathlib.Path(__file__).resolve().parent.parent
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--assets", type=pathlib.Path, default=root / "assets" / "prompts")
    parser.add_argument("--bindings", type=pathlib.Path,
                        default=root / "tests" / "golden" / "prompt_bindings.json")
    parser.add_argument("--out", type=pathlib.Path, default=root / "tests" / "golden" / "prompts")
    parser.add_argument("--check", action="store_true", help="Fail if any golden differs")
    args = parser.parse_args()

    bindings = json.loads(args.bindings.read_text(encoding="utf-8"))
    args.out.mkdir(parents=True, exist_ok=True)
    stale = []
    for template in sorted(args.assets.glob("*.txt")):
        rendered = template.read_text(encoding="utf-8").format(**bindings)
        target = args.out / template.name
        if args.check:
            if not target.exists() or target.read_text(encoding="utf-8") != rendered:
                stale.append(template.name)
        else:
            target.write_text(rendered, encoding="utf-8")
    if stale:
        raise SystemExit("stale goldens: " + ", ".join(stale))


if __name__ == "__main__":
    main()
