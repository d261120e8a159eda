import math
import random

import pytest

import deltae_oracle as oracle
from colorlab.core import ColorCoord, ColorModelId, Rgb8
from colorlab.metrics import DeltaEParams, LabPair, delta_e_76, delta_e_94, delta_e_2000
from colorlab.transforms import rgb_to_lab


def lab(l, a, b):
    return ColorCoord(ColorModelId.LAB, l, a, b)


def pair(l1, l2):
    return LabPair(lab(*l1), lab(*l2))


class TestLabPair:
    def test_requires_lab_model(self):
        with pytest.raises(ValueError):
            LabPair(lab(50, 0, 0), ColorCoord(ColorModelId.HSV, 0, 0, 0))


class TestParams:
    def test_defaults_are_one(self):
        p = DeltaEParams()
        assert (p.k_l, p.k_c, p.k_h) == (1.0, 1.0, 1.0)

    def test_must_be_positive(self):
        with pytest.raises(ValueError):
            DeltaEParams(k_l=0.0)


class TestDeltaE76:
    def test_identity(self):
        assert delta_e_76(pair((50, 0, 0), (50, 0, 0))) == 0.0

    def test_3_4_5_triangle(self):
        assert delta_e_76(pair((50, 0, 0), (53, 4, 0))) == 5.0

    def test_single_axis(self):
        assert delta_e_76(pair((100, 0, 0), (0, 0, 0))) == 100.0

    def test_symmetry(self):
        rng = random.Random(21)
        for _ in range(200):
            l1 = (rng.uniform(0, 100), rng.uniform(-90, 90), rng.uniform(-90, 90))
            l2 = (rng.uniform(0, 100), rng.uniform(-90, 90), rng.uniform(-90, 90))
            assert delta_e_76(pair(l1, l2)) == delta_e_76(pair(l2, l1))


class TestDeltaE94:
    def test_identity(self):
        assert delta_e_94(pair((50, 20, -30), (50, 20, -30))) == 0.0

    def test_pure_lightness_difference(self):
        assert delta_e_94(pair((50, 0, 0), (60, 0, 0))) == pytest.approx(10.0, abs=1e-12)

    def test_oracle_equivalence(self):
        for l1, l2 in oracle.reference_pairs():
            got = delta_e_94(pair(l1, l2))
            want = oracle.cie94(l1, l2)
            assert got == pytest.approx(want, abs=1e-6), (l1, l2)

    def test_textiles_constants(self):
        l1, l2 = (50, 30, 10), (55, 25, 5)
        graphic = delta_e_94(pair(l1, l2))
        textiles = delta_e_94(pair(l1, l2), textiles=True)
        assert graphic != textiles
        assert textiles == pytest.approx(oracle.cie94(l1, l2, k1=0.048, k2=0.014), abs=1e-9)

    def test_order_dependence_is_preserved(self):
        # the printed formula references the first color's chroma
        a, b = (50, 50, 0), (50, 0, 0)
        assert delta_e_94(pair(a, b)) != delta_e_94(pair(b, a))


class TestDeltaE2000:
    def test_identity(self):
        assert delta_e_2000(pair((50, 2.5, -30), (50, 2.5, -30))) == 0.0

    def test_neutral_pair_frozen_anchor(self):
        # oracle value for the neutral 10-L-step pair; the standard definition
        # divides by S_L = 1 + 0.015*25/sqrt(45) at mean L = 55
        assert delta_e_2000(pair((50, 0, 0), (60, 0, 0))) == pytest.approx(9.4706, abs=1e-3)

    def test_neutral_collapse_at_mean_l_50(self):
        # S_L = 1 exactly when the mean lightness is 50
        assert delta_e_2000(pair((45, 0, 0), (55, 0, 0))) == pytest.approx(10.0, abs=1e-12)

    def test_oracle_equivalence(self):
        pairs = oracle.reference_pairs()
        assert len(pairs) >= 30
        for l1, l2 in pairs:
            got = delta_e_2000(pair(l1, l2))
            want = oracle.ciede2000(l1, l2)
            assert got == pytest.approx(want, abs=1e-4), (l1, l2)

    def test_published_worked_examples(self):
        anchors = [
            ((50.0, 2.6772, -79.7751), (50.0, 0.0, -82.7485), 2.0425),
            ((50.0, 3.1571, -77.2803), (50.0, 0.0, -82.7485), 2.8615),
            ((50.0, 2.8361, -74.0200), (50.0, 0.0, -82.7485), 3.4412),
            ((50.0, -1.3802, -84.2814), (50.0, 0.0, -82.7485), 1.0000),
            ((50.0, 2.5, 0.0), (73.0, 25.0, -18.0), 27.1492),
            ((50.0, 2.5, 0.0), (61.0, -5.0, 29.0), 22.8977),
            ((50.0, 2.5, 0.0), (56.0, -27.0, -3.0), 31.9030),
            ((50.0, 2.5, 0.0), (58.0, 24.0, 15.0), 19.4535),
            ((60.2574, -34.0099, 36.2677), (60.4626, -34.1751, 39.4387), 1.2644),
            ((2.0776, 0.0795, -1.1350), (0.9033, -0.0636, -0.5514), 0.9082),
        ]
        for l1, l2, want in anchors:
            assert delta_e_2000(pair(l1, l2)) == pytest.approx(want, abs=1e-4)

    def test_custom_params(self):
        l1, l2 = (50, 10, -10), (60, -5, 25)
        got = delta_e_2000(pair(l1, l2), DeltaEParams(k_l=2.0))
        want = oracle.ciede2000(l1, l2, kl=2.0)
        assert got == pytest.approx(want, abs=1e-9)


class TestSharedInvariants:
    def test_non_negative(self):
        rng = random.Random(22)
        for _ in range(300):
            l1 = (rng.uniform(0, 100), rng.uniform(-100, 100), rng.uniform(-100, 100))
            l2 = (rng.uniform(0, 100), rng.uniform(-100, 100), rng.uniform(-100, 100))
            p = pair(l1, l2)
            assert delta_e_76(p) >= 0
            assert delta_e_94(p) >= 0
            assert delta_e_2000(p) >= 0

    def test_envelope_against_euclidean(self):
        # loose sanity bound for in-gamut colors
        rng = random.Random(23)
        for _ in range(10_000):
            c1 = Rgb8(rng.randrange(256), rng.randrange(256), rng.randrange(256))
            c2 = Rgb8(rng.randrange(256), rng.randrange(256), rng.randrange(256))
            if c1 == c2:
                continue
            p = LabPair(rgb_to_lab(c1), rgb_to_lab(c2))
            e76 = delta_e_76(p)
            e00 = delta_e_2000(p)
            assert e00 <= 3.0 * e76
            assert e00 >= e76 / 10.0

    def test_hue_radicand_never_nan(self):
        # colinear chroma growth makes the CIE94 radicand vanish up to noise
        cases = [
            ((50, 30, 40), (50, 60, 80)),
            ((10, 1e-8, 0), (10, 2e-8, 0)),
            ((0, 0, 0), (100, 0, 0)),
            ((50, -128, 128), (50, 128, -128)),
        ]
        for l1, l2 in cases:
            p = pair(l1, l2)
            assert not math.isnan(delta_e_94(p))
            assert not math.isnan(delta_e_2000(p))
