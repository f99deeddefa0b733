import json
import random

import pytest

from bridgecap.census import (
    CSV_HEADER,
    denominator_bound,
    distribution,
    enumerate_knots,
    fibonacci,
    format_table,
    rows_to_csv,
    table_to_json,
)
from bridgecap.contfrac import positive_cf
from bridgecap.farey import Fraction


def test_fibonacci_bound():
    assert [fibonacci(n) for n in range(1, 9)] == [1, 1, 2, 3, 5, 8, 13, 21]
    assert denominator_bound(16) == 1597
    # [1, 1, ..., 1, 2] attains the bound
    for n in range(3, 12):
        x = Fraction(fibonacci(n), fibonacci(n + 1))
        assert sum(positive_cf(x).entries) == n


def test_enumerate_seven():
    rows = enumerate_knots(7)
    assert len(rows) == 14
    assert distribution(rows).totals == {3: 1, 4: 1, 5: 2, 6: 3, 7: 7}


def test_enumerate_three():
    (row,) = enumerate_knots(3)
    assert (row.p, row.q, row.cr, row.gamma) == (2, 3, 3, 1)


def test_rows_sorted_and_unique():
    rows = enumerate_knots(10)
    assert rows == sorted(rows, key=lambda r: (r.cr, r.p, r.q))
    assert len({r.knot for r in rows}) == len(rows)


def test_scan_order_does_not_matter():
    qs = list(range(3, denominator_bound(11) + 1, 2))
    random.Random(0).shuffle(qs)
    a = enumerate_knots(11)
    b = enumerate_knots(11, denominators=qs)
    assert {r.knot for r in a} == {r.knot for r in b}
    assert a == b


def test_parallel_matches_serial():
    assert enumerate_knots(11, workers=3) == enumerate_knots(11, workers=1)


@pytest.mark.slow
def test_no_rows_beyond_denominator_bound():
    bound = denominator_bound(13)
    wide = enumerate_knots(13, denominators=range(3, 2 * bound + 1, 2))
    assert wide == enumerate_knots(13)


def test_crosscap_one_column():
    table = distribution(enumerate_knots(13))
    for cr in range(3, 14):
        assert table.cell(cr, 1) == (1 if cr % 2 else 0)


def test_csv_format():
    text = rows_to_csv(enumerate_knots(5))
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER) == "p,q,crossing_number,crosscap,genus,depth"
    assert lines[1] == "2,3,3,1,1,1"
    assert len(lines) == 1 + 4


def test_json_format():
    d = json.loads(table_to_json(distribution(enumerate_knots(7)), 7))
    assert d["max_cr"] == 7
    assert d["totals"]["7"] == 7
    assert d["counts"]["7"] == {"1": 1, "2": 2, "3": 4}
    assert sum(d["counts"]["6"].values()) == d["totals"]["6"]


def test_format_table():
    text = format_table(distribution(enumerate_knots(5)))
    assert text.splitlines()[1].split() == ["3", "1", "0", "1"]
