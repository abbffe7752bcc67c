"""Rewrite src/ngverify/goldens/*.csv from the exact oracle.

Run after an intentional solver or registry change, then review the diff.
"""

from pathlib import Path

from ngverify.claims import write_goldens

if __name__ == "__main__":
    target = Path(__file__).resolve().parents[1] / "src" / "ngverify" / "goldens"
    for path in write_goldens(target):
        print(path)
