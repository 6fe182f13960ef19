"""Export knot names and DT codes (<= 12 crossings) from the snappy_manifolds
tables into the plain `name {{n},{...}}` census format read by `cca table`.

Rolfsen names are used up to 10 crossings, Hoste-Thistlethwaite names
(K11a1, K12n888, ...) above that.

    python3 tools/export_census.py > crates/core/data/census.txt
"""
import os
import re
import sqlite3

import snappy_manifolds

DB = os.path.join(os.path.dirname(snappy_manifolds.__file__), "sqlite_files")


def decode(alpha):
    """Decode the alphabetical DT encoding, e.g. 'cacBCA.001'."""
    body = alpha.split(".")[0]
    n = ord(body[0]) - 96
    comps = ord(body[1]) - 96
    assert comps == 1, alpha
    letters = body[3:]
    assert len(letters) == n, alpha
    out = []
    for ch in letters:
        if ch.islower():
            out.append(2 * (ord(ch) - 96))
        else:
            out.append(-2 * (ord(ch) - 64))
    return n, out


def fmt(n, labels):
    return "{{%d},{%s}}" % (n, ",".join(str(x) for x in labels))


def main():
    print("# knot census: name and DT code, Rolfsen (<= 10) and Hoste-Thistlethwaite (11, 12)")
    print("0_1 {{0},{}}")
    rolf = sqlite3.connect(os.path.join(DB, "manifolds.sqlite"))
    rows = rolf.execute("select name, DT from link_exteriors where cusps = 1 order by id")
    for name, dt in rows:
        m = re.fullmatch(r"(\d+)_(\d+)", name)
        if not m or int(m.group(1)) > 10:
            continue
        print(name, fmt(*decode(dt)))
    ht = sqlite3.connect(os.path.join(DB, "more_manifolds.sqlite"))
    rows = ht.execute("select name, DT from HT_links where cusps = 1 order by id")
    for name, dt in rows:
        m = re.fullmatch(r"K(\d+)([an])(\d+)", name)
        if not m or int(m.group(1)) not in (11, 12):
            continue
        print(name, fmt(*decode(dt)))


if __name__ == "__main__":
    main()
