#!/usr/bin/env python3
"""Regenerates the bundled corpora under data/.

text_corpus/  ten plain-text documents (Python module documentation)
filetypes/    four groups of four files: <group>_<n>.<ext>

Output is committed; rerunning with a different Python version changes the
text files, so only run this when the corpus is meant to change.
"""

import argparse
import math
import pathlib
import pydoc
import random
import struct

TEXT_MODULES = [
    "argparse", "json", "textwrap", "heapq", "bisect",
    "shlex", "fractions", "difflib", "calendar", "string",
]
FILETYPE_TEXT_MODULES = ["csv", "tarfile", "logging", "zipfile"]

TEXT_LIMIT = 30 * 1024


def module_text(name, limit):
    text = pydoc.render_doc(name, renderer=pydoc.plaintext)
    data = text.encode("ascii", "replace")
    if len(data) > limit:
        cut = data.rfind(b"\n", 0, limit)
        data = data[: cut + 1 if cut > 0 else limit]
    return data


def dna_group(rng, count, length):
    ancestor = [rng.choice("ACGT") for _ in range(length)]
    out = []
    for _ in range(count):
        seq = list(ancestor)
        for i in range(length):
            r = rng.random()
            if r < 0.04:
                seq[i] = rng.choice("ACGT")
            elif r < 0.045:
                seq[i] = ""
        out.append("".join(seq).encode())
    return out


def signal_group(rng, count, samples):
    out = []
    for _ in range(count):
        f1, f2 = rng.uniform(0.01, 0.03), rng.uniform(0.05, 0.09)
        phase = rng.uniform(0, math.pi)
        values = [
            math.sin(f1 * t + phase) + 0.4 * math.sin(f2 * t) + rng.gauss(0, 0.01)
            for t in range(samples)
        ]
        out.append(struct.pack("<%df" % samples, *values))
    return out


def record_group(rng, count, records):
    names = [b"alpha", b"bravo", b"charlie", b"delta", b"echo", b"foxtrot"]
    out = []
    for _ in range(count):
        blob = bytearray()
        key = rng.randrange(1 << 16)
        for i in range(records):
            blob += struct.pack(
                "<IHh8sd",
                key + i,
                rng.randrange(4),
                rng.randrange(-50, 50),
                rng.choice(names).ljust(8, b"\0"),
                rng.uniform(0, 1000),
            )
        out.append(bytes(blob))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "data", type=pathlib.Path)
    parser.add_argument("--seed", type=int, default=20240611)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    text_dir = args.out / "text_corpus"
    text_dir.mkdir(parents=True, exist_ok=True)
    for name in TEXT_MODULES:
        (text_dir / f"{name}.txt").write_bytes(module_text(name, TEXT_LIMIT))

    ft = args.out / "filetypes"
    ft.mkdir(parents=True, exist_ok=True)
    for i, name in enumerate(FILETYPE_TEXT_MODULES):
        (ft / f"text_{i + 1}.txt").write_bytes(module_text(name, 12 * 1024))
    for i, blob in enumerate(dna_group(rng, 4, 12000)):
        (ft / f"dna_{i + 1}.seq").write_bytes(blob)
    for i, blob in enumerate(signal_group(rng, 4, 3000)):
        (ft / f"signal_{i + 1}.f32").write_bytes(blob)
    for i, blob in enumerate(record_group(rng, 4, 500)):
        (ft / f"records_{i + 1}.bin").write_bytes(blob)


if __name__ == "__main__":
    main()
