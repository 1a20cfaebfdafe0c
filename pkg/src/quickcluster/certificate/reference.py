"""Published certificate values, transcribed verbatim as literal fractions.

These are comparison targets. They are never recomputed here; the checks in
:mod:`quickcluster.certificate.checks` evaluate omega independently and
compare against these literals.

Omega is evaluated in triangle mode with alpha = 8/5 throughout.
"""
from fractions import Fraction

# x-vertex column order of the published breakpoint table
BREAKPOINT_COLUMNS = ((0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1))

# Published omega values on breakpoint triples (w-ij, w-jk, w-ki) drawn from
# {0, 0.35, 0.63, 1} that satisfy the triangle inequality, one row per triple,
# columns in BREAKPOINT_COLUMNS order.
_BREAKPOINT_ROWS = (
    (("0", "0", "0"), ("0", "-16/5", "-16/5", "-24/5")),
    (("0", "0.35", "0.35"), ("-21/50", "-5/2", "-69/50", "-149/50")),
    (("0", "0.63", "0.63"), ("-319/250", "-43/50", "-111/250", "-111/250")),
    (("0", "1", "1"), ("-16/5", "-8/5", "0", "0")),
    (("0.35", "0", "0.35"), ("-21/50", "-5/2", "-5/2", "-149/50")),
    (("0.35", "0.35", "0"), ("-21/50", "-69/50", "-5/2", "-149/50")),
    (("0.35", "0.35", "0.35"), ("-63/100", "-159/100", "-159/100", "-207/100")),
    (("0.35", "0.35", "0.63"), ("-99/500", "-579/500", "-131/500", "-371/500")),
    (("0.35", "0.63", "0.35"), ("-99/500", "-131/500", "-131/500", "-371/500")),
    (("0.35", "0.63", "0.63"), ("-319/250", "-43/50", "-111/250", "-111/250")),
    (("0.35", "1", "1"), ("-16/5", "-8/5", "0", "0")),
    (("0.63", "0", "0.63"), ("-319/250", "-43/50", "-43/50", "-111/250")),
    (("0.63", "0.35", "0.35"), ("-99/500", "-131/500", "-579/500", "-371/500")),
    (("0.63", "0.35", "0.63"), ("-319/250", "-43/50", "-43/50", "-111/250")),
    (("0.63", "0.63", "0"), ("-319/250", "-111/250", "-43/50", "-111/250")),
    (("0.63", "0.63", "0.35"), ("-319/250", "-111/250", "-43/50", "-111/250")),
    (("0.63", "0.63", "0.63"), ("0", "0", "0", "0")),
    (("0.63", "0.63", "1"), ("0", "0", "0", "0")),
    (("0.63", "1", "0.63"), ("0", "0", "0", "0")),
    (("0.63", "1", "1"), ("0", "0", "0", "0")),
    (("1", "0", "1"), ("-16/5", "-8/5", "-8/5", "0")),
    (("1", "0.35", "1"), ("-16/5", "-8/5", "-8/5", "0")),
    (("1", "0.63", "0.63"), ("0", "0", "0", "0")),
    (("1", "0.63", "1"), ("0", "0", "0", "0")),
    (("1", "1", "0"), ("-16/5", "0", "-8/5", "0")),
    (("1", "1", "0.35"), ("-16/5", "0", "-8/5", "0")),
    (("1", "1", "0.63"), ("0", "0", "0", "0")),
    (("1", "1", "1"), ("0", "0", "0", "0")),
)

BREAKPOINT_TABLE: dict[tuple[Fraction, Fraction, Fraction], dict[tuple[int, int, int], Fraction]] = {
    tuple(Fraction(w) for w in ws): {x: Fraction(v) for x, v in zip(BREAKPOINT_COLUMNS, vals)}
    for ws, vals in _BREAKPOINT_ROWS
}

# Published maxima of omega on the tight slice w-ki = w-ij + w-jk, per interval
# cell (indices into I1 = [0, 7/20], I2 = [7/20, 63/100], I3 = [63/100, 1]) and
# x-vertex: (x, stated argmax (w-ij, w-jk, w-ki), stated max).
_TIGHT_CASES = {
    (1, 1, 1): (
        ((0, 0, 0), ("0", "0", "0"), "0"),
        ((1, 1, 0), ("0", "7/20", "7/20"), "-5/2"),
        ((0, 1, 1), ("0", "7/20", "7/20"), "-69/50"),
        ((1, 1, 1), ("0", "7/20", "7/20"), "-149/50"),
    ),
    (1, 1, 2): (
        ((0, 0, 0), ("241/1000", "7/20", "591/1000"), "-719/140000"),
        ((1, 1, 0), ("7/25", "7/20", "63/100"), "-6/5"),
        ((0, 1, 1), ("7/25", "7/20", "63/100"), "-2/25"),
        ((1, 1, 1), ("7/25", "7/20", "63/100"), "-98/125"),
    ),
    (1, 1, 3): (
        ((0, 0, 0), ("7/25", "7/20", "63/100"), "-2/125"),
        ((1, 1, 0), ("7/25", "7/20", "63/100"), "-6/5"),
        ((0, 1, 1), ("7/25", "7/20", "63/100"), "-2/25"),
        ((1, 1, 1), ("7/20", "7/20", "7/10"), "-14/25"),
    ),
    (1, 2, 2): (
        ((0, 0, 0), ("241/1000", "7/20", "591/1000"), "-719/140000"),
        ((1, 1, 0), ("0", "63/100", "63/100"), "-43/50"),
        ((0, 1, 1), ("21/100", "21/50", "63/100"), "-69/2000"),
        ((1, 1, 1), ("0", "63/100", "63/100"), "-111/250"),
    ),
    (1, 2, 3): (
        ((0, 0, 0), ("7/25", "7/20", "63/100"), "-2/125"),
        ((1, 1, 0), ("0", "63/100", "63/100"), "-43/50"),
        ((0, 1, 1), ("7/20", "903/2000", "1603/2000"), "-513/80000"),
        ((1, 1, 1), ("7/20", "1143/2000", "1843/2000"), "-117351/560000"),
    ),
    (1, 3, 3): (
        ((0, 0, 0), ("0", "63/100", "63/100"), "-319/250"),
        ((1, 1, 0), ("0", "63/100", "63/100"), "-43/50"),
        ((0, 1, 1), ("0", "1", "1"), "0"),
        ((1, 1, 1), ("0", "1", "1"), "0"),
    ),
    (2, 1, 2): (
        ((0, 0, 0), ("7/20", "241/1000", "591/1000"), "-719/140000"),
        ((1, 1, 0), ("63/100", "0", "63/100"), "-43/50"),
        ((0, 1, 1), ("7/20", "7/25", "63/100"), "-38/125"),
        ((1, 1, 1), ("63/100", "0", "63/100"), "-111/250"),
    ),
    (2, 1, 3): (
        ((0, 0, 0), ("7/20", "7/25", "63/100"), "-2/125"),
        ((1, 1, 0), ("63/100", "0", "63/100"), "-43/50"),
        ((0, 1, 1), ("7/20", "7/20", "7/10"), "-2/25"),
        ((1, 1, 1), ("1143/2000", "7/20", "1843/2000"), "-117351/560000"),
    ),
    (2, 2, 3): (
        ((0, 0, 0), ("7/20", "7/20", "7/10"), "-6/25"),
        ((1, 1, 0), ("7/20", "7/20", "7/10"), "-6/5"),
        ((0, 1, 1), ("7/20", "903/2000", "1603/2000"), "-513/80000"),
        ((1, 1, 1), ("1/2", "1/2", "1"), "-247/3920"),
    ),
    (2, 3, 3): (
        ((0, 0, 0), ("37/100", "63/100", "1"), "-14547/7000"),
        ((1, 1, 0), ("37/100", "63/100", "1"), "-11843/7000"),
        ((0, 1, 1), ("37/100", "63/100", "1"), "-1443/7000"),
        ((1, 1, 1), ("37/100", "63/100", "1"), "-1443/7000"),
    ),
    (3, 1, 3): (
        ((0, 0, 0), ("63/100", "0", "63/100"), "-319/250"),
        ((1, 1, 0), ("63/100", "0", "63/100"), "-43/50"),
        ((0, 1, 1), ("63/100", "7/20", "49/50"), "-13/20"),
        ((1, 1, 1), ("1", "0", "1"), "0"),
    ),
    (3, 2, 3): (
        ((0, 0, 0), ("63/100", "37/100", "1"), "-14547/7000"),
        ((1, 1, 0), ("63/100", "37/100", "1"), "-11843/7000"),
        ((0, 1, 1), ("63/100", "37/100", "1"), "-4147/7000"),
        ((1, 1, 1), ("63/100", "37/100", "1"), "-1443/7000"),
    ),
}

TIGHT_SLICE_CASES: dict[tuple[int, int, int], tuple] = {
    cell: tuple((x, tuple(Fraction(v) for v in arg), Fraction(mx)) for x, arg, mx in rows)
    for cell, rows in _TIGHT_CASES.items()
}

# Published upper bounds on delta(x, .) within one interval of h, triangle
# mode, alpha = 8/5: (x, interval index, bound). Each is attained.
DELTA_INTERVAL_BOUNDS = (
    (1, 1, Fraction(-69, 100)),
    (0, 2, Fraction(-28311, 140000)),
    (1, 2, Fraction(-30551, 140000)),
    (0, 3, Fraction(-319, 500)),
)
