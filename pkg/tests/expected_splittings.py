"""Expected splittings of n by mu_{-q} over GF(q^2), 5 <= n <= 45, q in {3, 4, 5}.

Each entry lists S1 by the representatives of its q^2-cyclotomic cosets;
a trailing '*' marks the quadratic-residue splitting.  Lengths with no
splitting for any of the three q are absent.
"""

_RAW = {
    5: {3: "1*"},
    7: {4: "1*"},
    9: {4: "1 3; 1 6"},
    11: {3: "1*", 4: "1*", 5: "1*"},
    13: {3: "1 2; 1 7", 5: "1 2 4; 1 2 6; 1 3 4*; 1 3 6"},
    17: {3: "1*", 4: "1 2 3 6; 1 2 3 7; 1 2 5 6; 1 2 5 7; 1 3 6 8; 1 3 7 8; 1 5 6 8; 1 5 7 8",
         5: "1*"},
    19: {4: "1*", 5: "1*"},
    21: {4: "1 2 3 7; 1 2 3 14; 1 2 7 9; 1 2 9 14; 1 3 7 10; 1 3 10 14; 1 7 9 10; 1 9 10 14"},
    23: {3: "1*", 4: "1*"},
    25: {3: "1 5; 1 10"},
    27: {4: "1 3 9; 1 3 18; 1 6 9; 1 6 18"},
    29: {3: "1*"},
    31: {4: "1 3 5; 1 3 11; 1 5 7*; 1 7 11",
         5: "1 2 3 4 8; 1 2 3 4 17; 1 2 3 8 11; 1 2 3 11 17; 1 2 4 8 16*; 1 2 4 16 17; "
            "1 2 8 11 16; 1 2 11 16 17; 1 3 4 8 12; 1 3 4 12 17; 1 3 8 11 12; 1 3 11 12 17; "
            "1 4 8 12 16; 1 4 12 16 17; 1 8 11 12 16; 1 11 12 16 17"},
    33: {4: "1 3 5 11; 1 3 5 22; 1 3 7 11; 1 3 7 22; 1 5 6 11; 1 5 6 22; 1 6 7 11; 1 6 7 22"},
    37: {5: "1*"},
    41: {3: "1 2 4 7 8; 1 2 4 7 11; 1 2 4 8 16*; 1 2 4 11 16; 1 2 7 8 12; 1 2 7 11 12; "
            "1 2 8 12 16; 1 2 11 12 16; 1 4 6 7 8; 1 4 6 7 11; 1 4 6 8 16; 1 4 6 11 16; "
            "1 6 7 8 12; 1 6 7 11 12; 1 6 8 12 16; 1 6 11 12 16",
         5: "1 3; 1 6"},
    43: {4: "1 3 7; 1 3 9; 1 6 7; 1 6 9*"},
}


def _parse(cell: str) -> set[tuple[tuple[int, ...], bool]]:
    out = set()
    for item in cell.split(";"):
        item = item.strip()
        qr = item.endswith("*")
        out.add((tuple(int(t) for t in item.rstrip("*").split()), qr))
    return out


EXPECTED = {n: {q: _parse(row[q]) if q in row else set() for q in (3, 4, 5)}
            for n, row in _RAW.items()}
