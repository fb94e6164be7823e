#!/usr/bin/env python3
"""Regenerates the bundled CSV fixtures under data/.

Every fixture is synthetic and produced from seeded generators, so rerunning
this script leaves the committed files byte-identical. Run from anywhere:

    python3 tools/make_fixtures.py
"""

import pathlib
import random

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"

# Cubic Bezier control rows (one row per attribute, columns p0..p3) used by
# the synthetic-curve fixtures. Attributes 3 and 4 run downhill: smaller raw
# values are better there, matching an orientation of +,+,-,-.
CURVE_CONTROL = [
    [0.0, 0.35, 0.60, 1.0],
    [0.0, 0.40, 0.75, 1.0],
    [1.0, 0.70, 0.30, 0.0],
    [1.0, 0.60, 0.25, 0.0],
]

# Raw-unit affine maps (base, range) per attribute; positive ranges keep the
# per-attribute order identical in raw and normalized units.
CURVE_RAW_MAP = [(20.0, 60.0), (1.5, 6.0), (5.0, 45.0), (0.8, 7.4)]


def bezier(control_row, s):
    u = 1.0 - s
    b = (u * u * u, 3.0 * s * u * u, 3.0 * s * s * u, s * s * s)
    return sum(c * w for c, w in zip(control_row, b))


def write_csv(name, header, rows):
    path = DATA_DIR / name
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(rows)} data rows)")


def make_worked_example():
    write_csv(
        "trio_a.csv",
        ["object", "x1", "x2"],
        [
            ["A", "0.30", "0.25"],
            ["B", "0.25", "0.55"],
            ["C", "0.70", "0.70"],
        ],
    )
    write_csv(
        "trio_b.csv",
        ["object", "x1", "x2"],
        [
            ["A", "0.35", "0.40"],
            ["B", "0.25", "0.55"],
            ["C", "0.70", "0.70"],
        ],
    )


def curve_parameters(rng, n):
    """n parameters in [0,1]: exact endpoints, stratified interiors whose
    pairwise gaps stay above 2e-3, then a seeded shuffle."""
    values = [0.0]
    for i in range(1, n - 1):
        values.append((i + rng.uniform(-0.3, 0.3)) / (n - 1))
    values.append(1.0)
    rng.shuffle(values)
    return values


def make_synthetic_curve():
    rng = random.Random(20240501)
    n = 200
    s_values = curve_parameters(rng, n)
    ids = [f"s{i + 1:03d}" for i in range(n)]

    clean_rows = []
    noisy_rows = []
    strue_rows = []
    for obj_id, s in zip(ids, s_values):
        clean = [bezier(row, s) for row in CURVE_CONTROL]
        noisy = [min(1.0, max(0.0, c + rng.gauss(0.0, 0.02))) for c in clean]
        clean_raw = [f"{base + span * c:.9f}" for (base, span), c in zip(CURVE_RAW_MAP, clean)]
        noisy_raw = [f"{base + span * c:.9f}" for (base, span), c in zip(CURVE_RAW_MAP, noisy)]
        clean_rows.append([obj_id] + clean_raw)
        noisy_rows.append([obj_id] + noisy_raw)
        strue_rows.append([obj_id, f"{s:.9f}"])

    header = ["id", "x1", "x2", "x3", "x4"]
    write_csv("synthetic_curve_clean.csv", header, clean_rows)
    write_csv("synthetic_curve_noisy.csv", header, noisy_rows)
    write_csv("synthetic_curve_strue.csv", ["id", "s_true"], strue_rows)


def make_country_table():
    """171 rows, 4 attributes, orientation +,+,-,-. Row c042 attains the best
    extreme of every column and c137 the worst, so after min-max rescaling
    they sit exactly on the preferred and unpreferred corners."""
    rng = random.Random(7151)
    rows = []
    for i in range(1, 172):
        cid = f"c{i:03d}"
        if cid == "c042":
            rows.append([cid, "0.9500", "10500.00", "25.00", "1.80"])
            continue
        if cid == "c137":
            rows.append([cid, "0.3000", "400.00", "68.00", "21.00"])
            continue
        u = rng.uniform(0.0, 1.0)
        wellbeing = min(0.92, max(0.32, 0.35 + 0.55 * u + rng.gauss(0.0, 0.03)))
        income = min(9800.0, max(450.0, 500.0 + 9000.0 * u * u + rng.gauss(0.0, 300.0)))
        inequality = min(66.0, max(27.0, 62.0 - 30.0 * u + rng.gauss(0.0, 2.5)))
        emissions = min(19.8, max(2.4, 19.0 - 16.0 * u + rng.gauss(0.0, 1.2)))
        rows.append([
            cid,
            f"{wellbeing:.4f}",
            f"{income:.2f}",
            f"{inequality:.2f}",
            f"{emissions:.2f}",
        ])
    write_csv(
        "gapminder_style.csv",
        ["country", "wellbeing", "income", "inequality", "emissions"],
        rows,
    )


def make_journal_table():
    """451 data rows; 58 of them have one blank cell and are expected to be
    dropped by the loader, leaving 393 usable rows."""
    rng = random.Random(90210)
    n = 451
    rows = []
    for i in range(1, n + 1):
        u = rng.uniform(0.0, 1.0)
        citations = int(80 + 20000 * u**3 + rng.uniform(0.0, 400.0))
        impact = 0.1 + 9.0 * u * u + rng.uniform(0.0, 0.4)
        immediacy = 0.02 + 2.5 * u + rng.uniform(0.0, 0.2)
        articles = int(15 + 400 * rng.uniform(0.0, 1.0))
        halflife = 2.0 + 8.0 * rng.uniform(0.0, 1.0)
        rows.append([
            f"journal_{i:03d}",
            str(citations),
            f"{impact:.3f}",
            f"{immediacy:.3f}",
            str(articles),
            f"{halflife:.2f}",
        ])
    blank_rows = rng.sample(range(n), 58)
    for j, row_index in enumerate(sorted(blank_rows)):
        column = 1 + j % 5  # skip the id column, cycle through attributes
        rows[row_index][column] = ""
    write_csv(
        "jcr_style.csv",
        ["title", "citations", "impact", "immediacy", "articles", "halflife"],
        rows,
    )


def make_line():
    rows = [[f"r{i}", str(10 * i), str(3 * i + 2)] for i in range(1, 10)]
    write_csv("line.csv", ["id", "x1", "x2"], rows)


def make_antidiagonal():
    rows = [[f"a{i:02d}", str(5 * i), str(100 - 5 * i)] for i in range(0, 21)]
    write_csv("antidiag.csv", ["id", "x1", "x2"], rows)


def main():
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    make_worked_example()
    make_synthetic_curve()
    make_country_table()
    make_journal_table()
    make_line()
    make_antidiagonal()


if __name__ == "__main__":
    main()
