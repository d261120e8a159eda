"""Independent step-by-step oracle for the three CIE color-difference formulas.

Deliberately written against the published definitions (CIE 15 / the Sharma
CIEDE2000 worked procedure), enumerating every intermediate quantity, and kept
free of any import from the package under test. The package implementation is
checked against this module, never the other way round.
"""

import math


def cie76(lab1, lab2):
    dl = lab2[0] - lab1[0]
    da = lab2[1] - lab1[1]
    db = lab2[2] - lab1[2]
    return math.sqrt(dl * dl + da * da + db * db)


def cie94(lab1, lab2, kl=1.0, kc=1.0, kh=1.0, k1=0.045, k2=0.015):
    l1, a1, b1 = lab1
    l2, a2, b2 = lab2
    # step 1: lightness and chroma differences
    delta_l = l2 - l1
    c1 = math.sqrt(a1 * a1 + b1 * b1)
    c2 = math.sqrt(a2 * a2 + b2 * b2)
    delta_c = c2 - c1
    # step 2: hue difference from the Euclidean remainder, radicand floored at 0
    da = a2 - a1
    db = b2 - b1
    h_sq = da * da + db * db - delta_c * delta_c
    delta_h = math.sqrt(h_sq) if h_sq > 0.0 else 0.0
    # step 3: weighting functions referenced to the first color's chroma
    s_l = 1.0
    s_c = 1.0 + k1 * c1
    s_h = 1.0 + k2 * c1
    t1 = delta_l / (kl * s_l)
    t2 = delta_c / (kc * s_c)
    t3 = delta_h / (kh * s_h)
    return math.sqrt(t1 * t1 + t2 * t2 + t3 * t3)


def ciede2000(lab1, lab2, kl=1.0, kc=1.0, kh=1.0):
    l1, a1, b1 = lab1
    l2, a2, b2 = lab2

    # step 1: C'_i and h'_i
    c1 = math.sqrt(a1 * a1 + b1 * b1)
    c2 = math.sqrt(a2 * a2 + b2 * b2)
    c_bar = (c1 + c2) / 2.0
    g = 0.5 * (1.0 - math.sqrt(c_bar**7 / (c_bar**7 + 25.0**7)))
    a1p = (1.0 + g) * a1
    a2p = (1.0 + g) * a2
    c1p = math.sqrt(a1p * a1p + b1 * b1)
    c2p = math.sqrt(a2p * a2p + b2 * b2)

    def hue_angle(ap, b):
        if ap == 0.0 and b == 0.0:
            return 0.0
        h = math.degrees(math.atan2(b, ap))
        return h + 360.0 if h < 0.0 else h

    h1p = hue_angle(a1p, b1)
    h2p = hue_angle(a2p, b2)

    # step 2: dL', dC', dH'
    delta_lp = l2 - l1
    delta_cp = c2p - c1p
    if c1p * c2p == 0.0:
        delta_hp_angle = 0.0
    elif abs(h2p - h1p) <= 180.0:
        delta_hp_angle = h2p - h1p
    elif h2p - h1p > 180.0:
        delta_hp_angle = h2p - h1p - 360.0
    else:
        delta_hp_angle = h2p - h1p + 360.0
    delta_hp = 2.0 * math.sqrt(c1p * c2p) * math.sin(math.radians(delta_hp_angle) / 2.0)

    # step 3: averages
    l_bar_p = (l1 + l2) / 2.0
    c_bar_p = (c1p + c2p) / 2.0
    if c1p * c2p == 0.0:
        h_bar_p = h1p + h2p
    elif abs(h1p - h2p) <= 180.0:
        h_bar_p = (h1p + h2p) / 2.0
    elif h1p + h2p < 360.0:
        h_bar_p = (h1p + h2p + 360.0) / 2.0
    else:
        h_bar_p = (h1p + h2p - 360.0) / 2.0

    t = (
        1.0
        - 0.17 * math.cos(math.radians(h_bar_p - 30.0))
        + 0.24 * math.cos(math.radians(2.0 * h_bar_p))
        + 0.32 * math.cos(math.radians(3.0 * h_bar_p + 6.0))
        - 0.20 * math.cos(math.radians(4.0 * h_bar_p - 63.0))
    )
    delta_theta = 30.0 * math.exp(-(((h_bar_p - 275.0) / 25.0) ** 2))
    r_c = 2.0 * math.sqrt(c_bar_p**7 / (c_bar_p**7 + 25.0**7))
    s_l = 1.0 + (0.015 * (l_bar_p - 50.0) ** 2) / math.sqrt(20.0 + (l_bar_p - 50.0) ** 2)
    s_c = 1.0 + 0.045 * c_bar_p
    s_h = 1.0 + 0.015 * c_bar_p * t
    r_t = -math.sin(math.radians(2.0 * delta_theta)) * r_c

    tl = delta_lp / (kl * s_l)
    tc = delta_cp / (kc * s_c)
    th = delta_hp / (kh * s_h)
    return math.sqrt(tl * tl + tc * tc + th * th + r_t * tc * th)


def reference_pairs():
    """Deterministic Lab pairs spanning the axes, quadrants, and the blue zone."""
    pairs = [
        ((50.0, 0.0, 0.0), (50.0, 0.0, 0.0)),
        ((50.0, 0.0, 0.0), (53.0, 4.0, 0.0)),
        ((100.0, 0.0, 0.0), (0.0, 0.0, 0.0)),
        ((50.0, 0.0, 0.0), (60.0, 0.0, 0.0)),
        ((50.0, 2.6772, -79.7751), (50.0, 0.0, -82.7485)),
        ((50.0, 3.1571, -77.2803), (50.0, 0.0, -82.7485)),
        ((50.0, 2.8361, -74.0200), (50.0, 0.0, -82.7485)),
        ((50.0, -1.3802, -84.2814), (50.0, 0.0, -82.7485)),
        ((50.0, 2.5, 0.0), (73.0, 25.0, -18.0)),
        ((50.0, 2.5, 0.0), (61.0, -5.0, 29.0)),
        ((50.0, 2.5, 0.0), (56.0, -27.0, -3.0)),
        ((50.0, 2.5, 0.0), (58.0, 24.0, 15.0)),
        ((60.2574, -34.0099, 36.2677), (60.4626, -34.1751, 39.4387)),
        ((35.0831, -44.1164, 3.7933), (35.0232, -40.0716, 1.5901)),
        ((22.7233, 20.0904, -46.6940), (23.0331, 14.9730, -42.5619)),
        ((2.0776, 0.0795, -1.1350), (0.9033, -0.0636, -0.5514)),
    ]
    # seeded LCG walk over the Lab box, avoiding any library RNG
    state = 0x2545F4914F6CDD1D
    for _ in range(24):
        vals = []
        for _ in range(6):
            state = (state * 6364136223846793005 + 1442695040888963407) % 2**64
            vals.append(state / 2**64)
        pairs.append(
            (
                (100.0 * vals[0], 200.0 * vals[1] - 100.0, 200.0 * vals[2] - 100.0),
                (100.0 * vals[3], 200.0 * vals[4] - 100.0, 200.0 * vals[5] - 100.0),
            )
        )
    return pairs
