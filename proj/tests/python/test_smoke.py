"""Smoke tests for the _qslab extension module."""

import _qslab


def test_expand_named_series():
    reg4 = _qslab.expand("reg4", 10)
    assert reg4 == [1, 1, 2, 3, 4, 6, 9, 12, 16, 22, 29]
    assert _qslab.expand("DE3", 7)[7] == 5
    assert _qslab.expand("cubic", 6)[6] == 23


def test_expand_expression():
    assert _qslab.expand("poch(q^4;q^4;inf)/poch(q;q;inf)", 5) == [1, 1, 2, 3, 4, 6]


def test_oracle_agrees_with_series():
    for name, constraint in [("DE1", "de1"), ("DEe", "dee"), ("reg4gt1", "reg4gt1")]:
        coeffs = _qslab.expand(name, 12)
        for n in range(13):
            assert _qslab.oracle_count(constraint, n) == coeffs[n]


def test_partition_listing():
    parts = _qslab.partitions("deExact:2", 10)
    assert sorted(parts) == sorted([[5, 5], [3, 3, 2, 1, 1], [3, 3, 1, 1, 1, 1]])


def test_identity_check():
    report = _qslab.check_identity(
        "poch(-q^2;q^2;inf)/poch(q;q^2;inf)", "poch(q^4;q^4;inf)/poch(q;q;inf)", 60
    )
    assert report["verdict"] == "PASS"
    report = _qslab.check_identity("q", "q^2", 10)
    assert report["verdict"] == "FAIL"
    assert report["first_failure"]["index"] == 1


def test_verify_single_check():
    reports = _qslab.verify("T6", order=60)
    assert len(reports) == 1
    assert reports[0]["verdict"] == "PASS"


def test_catalog_round_trip():
    for name in _qslab.series_names():
        text = _qslab.series_expression(name)
        assert _qslab.expand(text, 40) == _qslab.expand(name, 40)
