import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import curvemass as cm

CONFIGS = Path(os.environ.get("CURVEMASS_CONFIGS", Path(__file__).resolve().parents[2] / "configs"))


def brute_hyperelliptic_f2(h, f, m):
    # Only m = 1 over the prime field, where field elements are 0 and 1.
    assert m == 1
    ev = lambda poly, x: sum(c * x**i for i, c in enumerate(poly)) % 2
    affine = sum(1 for x in (0, 1) for y in (0, 1) if (y * y + ev(h, x) * y - ev(f, x)) % 2 == 0)
    return affine + 1


def test_projective_line():
    p1 = cm.CurveModel.projective_line(2)
    assert p1.genus() == 0
    assert p1.count_series(3) == [3, 5, 9]
    Z = cm.zeta_of(p1)
    assert Z.a == [1]
    assert Z.class_number() == 1


def test_elliptic_round_trip():
    E = cm.CurveModel.hyperelliptic(2, [1], [0, 0, 0, 1])
    assert E.count_points(1) == brute_hyperelliptic_f2([1], [0, 0, 0, 1], 1) == 3
    Z = cm.zeta_of(E)
    assert Z.g == 1 and Z.class_number() == 3
    assert Z.regenerate_counts(4) == E.count_series(4)
    assert cm.zeta_from_counts(2, 1, [3]) == Z


def test_degree_spectrum():
    assert cm.degree_spectrum(2, [3, 5, 9]) == [3, 1, 2]


def test_groups_and_masses():
    assert cm.group_order(cm.builtin_group("Sp", 2), 2) == 720
    Z = cm.zeta_of(cm.CurveModel.projective_line(2))
    gl2 = cm.builtin_group("GL", 2)
    assert cm.mass_bun(gl2, Z) == Fraction(1, 3)
    assert cm.zagier_ss_mass(2, 0, Z) == Fraction(1, 6) == cm.hn_ss_mass(2, 0, Z)
    assert cm.zagier_ss_mass(2, 1, Z) == 0
    custom = cm.GroupSpec("twisted", 3, [2], tamagawa=Fraction(1, 2))
    assert custom.tamagawa == Fraction(1, 2)


def test_asymptotics():
    tv = cm.TVData(4, {1: 1})
    assert cm.tv_bound(tv) == 1
    value, tail = cm.rhs_pic(tv, 10)
    assert value == pytest.approx(1.20752, rel=1e-5)
    assert tail == 0
    gm_value, _ = cm.rhs_group(tv, cm.builtin_group("Gm", 1), 10)
    assert gm_value == value
    rows, dominant = cm.dominance_check(tv, 2, 10)
    assert dominant and len(rows) == 2


def test_errors():
    with pytest.raises(cm.InvalidArgument):
        cm.CurveModel.hyperelliptic(2, [], [0, 0, 0, 1])
    with pytest.raises(cm.SingularModel):
        cm.zeta_of(cm.CurveModel.hyperelliptic(3, [], [0, 0, 0, 1]))
    with pytest.raises(ValueError):
        cm.builtin_group("E8", 1)
    with pytest.raises(cm.ConfigError):
        cm.run("zeta", {"schema": 1, "curves": []})


@pytest.mark.parametrize("command,config", [("zeta", "basic.json"), ("mass", "basic.json"), ("asymptote", "asymptote_tv.json")])
def test_run_matches_configs(command, config):
    report = cm.run(command, json.loads((CONFIGS / config).read_text()))
    assert isinstance(report, dict) and report
    json.dumps(report)
