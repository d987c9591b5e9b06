"""Smoke tests for the Python bindings: a few worked values per module."""

import math
import os

import pytest

glsnorm = pytest.importorskip("glsnorm")


@pytest.fixture(scope="module")
def base2():
    return glsnorm.System(["1/2", "1/2"])


@pytest.fixture(scope="module")
def base10():
    return glsnorm.System(["1/10"] * 10)


def test_system_validation():
    sys3 = glsnorm.System(["1/4", "1/2", "1/4"])
    assert sys3.digit_count == 3
    assert sys3.measure(0) == "1/2"
    assert sys3.user_position(0) == 1
    with pytest.raises(ValueError):
        glsnorm.System(["1/2", "1/3"])


def test_champernowne_prefix(base10):
    digits = glsnorm.digit_prefix(base10, 190)
    expected = list(range(10)) + [d for hi in range(10) for lo in range(10)
                                  for d in (hi, lo)]
    assert digits == expected


def test_enumeration_and_thresholds(base2):
    words = glsnorm.enumerate_prefix(base2, 6)
    assert words == [[0], [1], [0, 0], [0, 1], [1, 0], [1, 1]]
    counts = glsnorm.threshold_counts(base2, "1/4", [0])
    assert counts["digit_total"] == 10
    assert counts["word_total"] == 6
    assert counts["occurrences"] == 5


def test_lattice_sums(base2):
    assert glsnorm.digit_sum(base2, "1/4")["value"] == 10
    assert glsnorm.word_sum(base2, "1/4")["value"] == 7
    assert glsnorm.occurrence_sum(base2, "1/4", [0])["value"] == 5
    assert len(glsnorm.lattice_points(base2, "1/4")) == 6


def test_identity_chain(base2):
    counts = glsnorm.threshold_counts(base2, "1/64")
    assert counts["digit_total"] == glsnorm.digit_sum(base2, "1/64")["value"]
    assert counts["word_total"] == glsnorm.word_sum(base2, "1/64")["value"] - 1


def test_block_statistics(base2):
    census = glsnorm.block_counts(base2, [0, 1, 0, 0], 2)
    assert census[(0, 1)] == 1
    assert census[(0, 0)] == 1
    report = glsnorm.hot_spot_report(base2, 100, 2)
    assert report["max_ratio"] >= 1.0
    assert report["min_ratio"] <= 1.0


def test_surface_and_laplace(base2):
    sums = glsnorm.surface_sums(base2, "2^-10")
    assert sums["word_sum"] == pytest.approx(1024.0, rel=1e-9)
    assert sums["digit_sum"] == pytest.approx(10 * 1024.0, rel=1e-9)

    analysis = glsnorm.laplace_analysis(base2, "1/4")
    assert analysis["scale"] == pytest.approx(2.0)
    assert analysis["maximizer"] == pytest.approx([1.0, 1.0])
    assert analysis["value_at_max"] == pytest.approx(2 * math.log(2))
    assert analysis["eigenvalues"][0] == pytest.approx(4 * math.log(2))

    gauss = glsnorm.gaussian_sum_check(1e4, 1.0)
    assert gauss["rel_error"] < 1e-2


def test_entropy_objective():
    assert glsnorm.multinomial_entropy([1.0, 1.0]) == pytest.approx(2 * math.log(2))
    assert glsnorm.multinomial_entropy([5.0, 0.0]) == 0.0


def test_load_config():
    config_dir = os.environ.get("GLSNORM_CONFIG_DIR")
    if not config_dir:
        pytest.skip("config dir not exported")
    sys10 = glsnorm.load_system(os.path.join(config_dir, "base10.json"))
    assert sys10.digit_count == 10
    assert sys10.symbol(3) == "3"
