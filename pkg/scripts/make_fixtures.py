"""Regenerate src/lietriple/fixtures/*.json from lietriple.families."""

import os

from lietriple import documents
from lietriple.families import packaged_fixtures

OUT = os.path.join(os.path.dirname(__file__), os.pardir, "src", "lietriple", "fixtures")


def main():
    os.makedirs(OUT, exist_ok=True)
    for name, obj in packaged_fixtures().items():
        documents.save(obj, os.path.join(OUT, name + ".json"))
        print(name)


if __name__ == "__main__":
    main()
