import math
from pathlib import Path

import numpy as np
import pytest

import qfam

CORPUS = Path(__file__).resolve().parents[2] / "corpus"


def test_schema_version():
    report = qfam.check("check-coassoc", CORPUS / "semigroup-map2.json")
    assert report["schema_version"] == qfam.SCHEMA_VERSION
    assert report["status"] == "pass"


def test_nonclassical_magic():
    m = qfam.magic_check(0.7)
    assert m["pass"]
    assert m["max_commutator"] == pytest.approx(math.sin(1.4) / 2, abs=1e-12)


def test_permutation_magic_commutes():
    m = qfam.permutation_magic_check([1, 2, 0])
    assert m["pass"]
    assert m["max_commutator"] == 0.0


def test_identity_morphism_defects():
    d = qfam.morphism_defects([2, 1], [2, 1], np.eye(5, dtype=complex))
    assert d["max"] == 0.0


def test_transpose_is_not_multiplicative():
    t = np.zeros((4, 4), dtype=complex)
    for r in range(2):
        for s in range(2):
            t[2 * s + r, 2 * r + s] = 1
    d = qfam.morphism_defects([2], [2], t)
    assert d["star"] == 0.0
    assert d["mult"] > 0.5


def test_set_maps_and_cancellation():
    assert len(qfam.set_map_tables(3)) == 27
    z3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert qfam.cancellation_rank(z3, "left")["full"]
    left_zero = [[0, 0], [1, 1]]
    assert qfam.cancellation_rank(left_zero, "left")["rank"] == 2
    assert qfam.cancellation_rank(left_zero, "right")["full"]
    assert qfam.coassociativity_defect(z3) <= 1e-12


def test_podles_rank():
    assert qfam.wang_podles_rank(0.7) == {"rank": 16, "ambient": 16, "full": True}


def test_parse_round_trip():
    doc = {"blocks": [2, 1]}
    assert qfam.parse(doc)["blocks"] == [2, 1]
    with pytest.raises(qfam.QfamError):
        qfam.parse({"blocks": [0]})


def test_run_suite_and_cli():
    assert "magic" in qfam.suite_names()
    assert qfam.run_suite("magic", seed=3)["status"] == "pass"
    code, out, _ = qfam.run_cli(["check-magic", "--theta", "0.7"])
    assert code == 0
    assert "PASS" in out
    code, _, err = qfam.run_cli(["verify-hom", "/nonexistent.json"])
    assert code == 2
    assert "error" in err
