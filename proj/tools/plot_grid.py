#!/usr/bin/env python3
"""Render the CSV from `grass kp-grid` as an ASCII dominance map.

Each distinct dominant cell gets a letter; lowercase means tau < 0 there,
uppercase tau > 0, '*' an exact zero. Example:

    grass kp-grid -k 2 -n 4 --t3 -8 --x -12:12 --y -12:12 --step 0.5 \
        | tools/plot_grid.py
"""
import csv
import string
import sys


def main():
    rows = list(csv.DictReader(sys.stdin))
    if not rows:
        sys.exit("no grid data on stdin")
    xs = sorted({float(r["x"]) for r in rows})
    ys = sorted({float(r["y"]) for r in rows})
    cells = []
    for r in rows:
        if r["cell"] not in cells:
            cells.append(r["cell"])
    if len(cells) > len(string.ascii_uppercase):
        sys.exit("too many distinct cells for a letter map")
    letter = {c: string.ascii_uppercase[i] for i, c in enumerate(cells)}

    xi = {v: i for i, v in enumerate(xs)}
    yi = {v: i for i, v in enumerate(ys)}
    canvas = [[" "] * len(xs) for _ in ys]
    for r in rows:
        ch = letter[r["cell"]]
        sign = int(r["tau_sign"])
        if sign < 0:
            ch = ch.lower()
        elif sign == 0:
            ch = "*"
        canvas[yi[float(r["y"])]][xi[float(r["x"])]] = ch

    for row in reversed(canvas):  # y grows upward
        print("".join(row))
    print()
    for c in cells:
        print(f"  {letter[c]} = ({c})")
    print(f"  x: {xs[0]} .. {xs[-1]}   y: {ys[0]} .. {ys[-1]}")


if __name__ == "__main__":
    main()
