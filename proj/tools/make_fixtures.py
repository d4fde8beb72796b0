#!/usr/bin/env python3
"""Writes the bundled OEIS b-file fixtures under data/oeis/.

Terms come from the defining second-order recurrences, evaluated with Python
integers, independently of the C++ library they are used to check.
"""
import pathlib
import sys

TERMS = 40

# accession: (description, a0, a1, multiplier)
SEQUENCES = {
    "A000045": ("Fibonacci numbers", 0, 1, 1),
    "A000129": ("Pell numbers", 0, 1, 2),
    "A006190": ("a(n) = 3*a(n-1) + a(n-2), a(0)=0, a(1)=1", 0, 1, 3),
    "A000032": ("Lucas numbers", 2, 1, 1),
    "A002203": ("Companion Pell numbers", 2, 2, 2),
    "A006497": ("a(n) = 3*a(n-1) + a(n-2), a(0)=2, a(1)=3", 2, 3, 3),
}


def terms(a0, a1, k, count):
    out = [a0, a1]
    while len(out) < count:
        out.append(k * out[-1] + out[-2])
    return out[:count]


def main(root):
    out_dir = pathlib.Path(root) / "data" / "oeis"
    out_dir.mkdir(parents=True, exist_ok=True)
    for acc, (desc, a0, a1, k) in SEQUENCES.items():
        lines = [f"# {acc} {desc}", f"# offset 0, {TERMS} terms"]
        lines += [f"{i} {t}" for i, t in enumerate(terms(a0, a1, k, TERMS))]
        (out_dir / f"{acc}.bfile").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent)
