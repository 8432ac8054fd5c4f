import csv
from pathlib import Path

import pytest

from perfdamp import comparison as cmp

GOLDEN = Path(__file__).parent / "golden"


def _load_golden(name):
    with open(GOLDEN / name, newline="") as fh:
        rows = list(csv.reader(fh))
    return {row[0]: tuple(float(v) for v in row[1:]) for row in rows[1:]}


class TestDataset:
    def test_shape(self):
        records = cmp.builtin_dataset()
        assert len(records) == 6
        assert [r.id for r in records] == list("ABCDEF")

    def test_record_a(self, dataset):
        rec = dataset["A"]
        assert rec.c_m == 47.38e-6
        assert rec.f0 == 201.637e3
        assert rec.alpha == 0.918

    def test_record_f_geometry(self, dataset):
        geom = dataset["F"].geom
        assert geom.L == pytest.approx(363.8e-6)
        assert geom.W == pytest.approx(243.8e-6)
        assert (geom.M, geom.N) == (36, 24)

    def test_common_heights(self, dataset):
        for rec in dataset.values():
            assert rec.geom.h == 1.6e-6
            assert rec.geom.h_c == 15e-6


class TestRelativeError:
    def test_exact_model(self):
        assert cmp.relative_error(47.38e-6, 47.38e-6) == 0.0

    def test_type_a_m1(self):
        assert cmp.relative_error(36.23e-6, 47.38e-6) == pytest.approx(-23.53, abs=0.01)

    def test_zero_model(self):
        assert cmp.relative_error(0.0, 1.0) == -100.0


class TestTableReproduction:
    def test_table3_matches_golden(self, gas):
        repro = cmp.reproduce_table3(gas)
        golden = _load_golden("table3.csv")
        for dev, published in golden.items():
            for got, want in zip(repro[dev], published):
                assert got == pytest.approx(want, abs=cmp.TABLE3_TOL_PP)
                assert (got < 0) == (want < 0)

    def test_table4_matches_golden(self, gas):
        repro = cmp.reproduce_table4(gas)
        golden = _load_golden("table4.csv")
        for dev, published in golden.items():
            for got, want in zip(repro[dev], published):
                assert got == pytest.approx(want, abs=cmp.TABLE4_TOL_PP)
                assert (got < 0) == (want < 0)

    def test_table5_matches_golden(self, gas):
        repro = cmp.reproduce_table5(gas)
        golden = _load_golden("table5.csv")
        for dev, published in golden.items():
            for got, want in zip(repro[dev], published):
                assert got == pytest.approx(want, abs=cmp.TABLE5_TOL_PP)

    def test_table5_rows_normalized(self, gas):
        for row in cmp.reproduce_table5(gas).values():
            assert sum(row) == pytest.approx(100.0, abs=0.01)

    def test_table5_e_f_identical(self, gas):
        repro = cmp.reproduce_table5(gas)
        assert repro["E"] == repro["F"]

    def test_systematic_underestimate(self, gas):
        cells = [v for row in cmp.reproduce_table3(gas).values() for v in row]
        mean = sum(cells) / len(cells)
        assert -20.0 < mean < -10.0

    def test_within_tolerance_helper(self):
        pub = {"A": (1.0, 2.0)}
        assert cmp.within_tolerance({"A": (1.5, 2.5)}, pub, 1.0)
        assert not cmp.within_tolerance({"A": (1.5, 3.5)}, pub, 1.0)
