"""Weil representation: normalized shift operators, tori, peaks, flags."""

import numpy as np
import pytest

from helpers import psi

from tfshift import (
    GroupElement,
    Line,
    PlanePoint,
    Signal,
    as_prime,
    default_torus_roster,
    flag_family,
    flag_waveform,
    heisenberg_op,
    identity,
    inner,
    legendre,
    line_points,
    make_torus,
    mf_full,
    random_signal,
    sigma_op,
    torus_eigenbasis,
    weil_operator,
)


def rho_matrix(g: GroupElement) -> np.ndarray:
    return weil_operator(g).matrix


def sigma_matrix(v: PlanePoint) -> np.ndarray:
    p = v.p.p
    cols = []
    for t in range(p):
        e = np.zeros(p, dtype=np.complex128)
        e[t] = 1.0
        cols.append(sigma_op(Signal(v.p, e), v).samples)
    return np.stack(cols, axis=1)


# ------------------------------------------------------------ sigma algebra

def test_sigma_is_phased_heisenberg():
    p = as_prime(31)
    f = random_signal(p, seed=1)
    inv2 = pow(2, -1, 31)
    for tau, om in [(0, 0), (1, 0), (0, 1), (5, 12), (30, 30)]:
        v = PlanePoint(tau, om, p)
        want = psi(inv2 * tau * om, 31) * heisenberg_op(f, v).samples
        assert np.abs(sigma_op(f, v).samples - want).max() < 1e-12


def test_sigma_symplectic_cocycle():
    # sigma(a) sigma(b) = psi(2^-1 (tau_a omega_b - omega_a tau_b)) sigma(a+b)
    p = as_prime(13)
    inv2 = pow(2, -1, 13)
    f = random_signal(p, seed=2)
    rng = np.random.default_rng(4)
    for _ in range(25):
        ta, oa, tb, ob = (int(x) for x in rng.integers(0, 13, size=4))
        a, b = PlanePoint(ta, oa, p), PlanePoint(tb, ob, p)
        lhs = sigma_op(sigma_op(f, b), a).samples
        rhs = psi(inv2 * (ta * ob - oa * tb), 13) * sigma_op(f, a + b).samples
        assert np.abs(lhs - rhs).max() < 1e-12


def test_sigma_adjoint_is_negation():
    p = as_prime(13)
    f = random_signal(p, seed=3)
    g = random_signal(p, seed=4)
    v = PlanePoint(5, 8, p)
    lhs = inner(sigma_op(f, v), g)
    rhs = inner(f, sigma_op(g, PlanePoint(-5, -8, p)))
    assert lhs == pytest.approx(rhs, abs=1e-12)


# ----------------------------------------------------------- group elements

def test_group_element_validation():
    p = as_prime(31)
    g = GroupElement(1, 2, 3, 7, p)  # det = 7 - 6 = 1
    assert (g.a, g.b, g.c, g.d) == (1, 2, 3, 7)
    with pytest.raises(ValueError):
        GroupElement(1, 2, 3, 8, p)  # det = 2
    e = identity(p)
    assert (e.a, e.b, e.c, e.d) == (1, 0, 0, 1)


def test_group_action_on_plane():
    p = as_prime(31)
    g = GroupElement(2, 3, 3, 5, p)  # det = 10 - 9 = 1
    v = PlanePoint(4, 9, p)
    gv = g.act(v)
    assert (gv.tau, gv.omega) == ((2 * 4 + 3 * 9) % 31, (3 * 4 + 5 * 9) % 31)


# ------------------------------------------------------------ Weil operator

def test_weil_identity_is_identity():
    rho = rho_matrix(identity(31))
    assert np.abs(rho - np.eye(31)).max() < 1e-9


def sample_elements(p):
    pp = as_prime(p)
    w = GroupElement(0, -1, 1, 0, pp)
    up = GroupElement(1, 1, 0, 1, pp)
    dg = GroupElement(3, 0, 0, pow(3, -1, p), pp)
    gen = GroupElement(2, 3, 3, 5, pp)
    return [w, up, dg, gen]


@pytest.mark.parametrize("idx", [0, 1, 2, 3])
def test_weil_operator_unitary(idx):
    g = sample_elements(31)[idx]
    rho = rho_matrix(g)
    assert np.abs(rho @ rho.conj().T - np.eye(31)).max() < 1e-9


@pytest.mark.parametrize("idx", [0, 1, 2, 3])
def test_weil_intertwines_sigma(idx):
    # rho(g) sigma(v) rho(g)^-1 = sigma(g v), checked as matrices
    p = as_prime(31)
    g = sample_elements(31)[idx]
    rho = rho_matrix(g)
    rng = np.random.default_rng(idx)
    pts = [PlanePoint(int(a), int(b), p) for a, b in rng.integers(0, 31, (8, 2))]
    pts += [PlanePoint(1, 0, p), PlanePoint(0, 1, p)]
    for v in pts:
        lhs = rho @ sigma_matrix(v) @ rho.conj().T
        rhs = sigma_matrix(g.act(v))
        assert np.abs(lhs - rhs).max() < 1e-8, (v.tau, v.omega)


def test_weil_homomorphism_up_to_phase():
    p = as_prime(31)
    els = sample_elements(31)
    for g1 in els[:2]:
        for g2 in els[2:]:
            prod = GroupElement(
                g1.a * g2.a + g1.b * g2.c, g1.a * g2.b + g1.b * g2.d,
                g1.c * g2.a + g1.d * g2.c, g1.c * g2.b + g1.d * g2.d, p)
            lhs = rho_matrix(g1) @ rho_matrix(g2)
            rhs = rho_matrix(prod)
            k = np.unravel_index(np.argmax(np.abs(rhs)), rhs.shape)
            c = lhs[k] / rhs[k]
            assert abs(abs(c) - 1.0) < 1e-9
            assert np.abs(lhs - c * rhs).max() < 1e-8


def test_weil_operator_deterministic_and_cached():
    g = sample_elements(31)[3]
    r1 = weil_operator(g)
    r2 = weil_operator(g)
    assert r1 is r2  # cached
    fresh = GroupElement(2, 3, 3, 5, as_prime(31))
    assert np.array_equal(weil_operator(fresh).matrix, r1.matrix)
    assert not r1.matrix.flags.writeable


# -------------------------------------------------------------------- tori

def test_make_torus_kinds_and_orders():
    p = 31
    for trace in (0, 1, 3, 5, 6):
        T = make_torus(trace, p)
        disc = legendre(trace * trace - 4, p)
        if disc == 1:
            assert T.kind == "split" and T.order == p - 1
        else:
            assert T.kind == "nonsplit" and T.order == p + 1
        g = T.generator
        # generator commutes with the defining regular element [[t,-1],[1,0]]
        a, b, c, d = g.a, g.b, g.c, g.d
        lhs = ((a * trace + b) % p, -a % p, (c * trace + d) % p, -c % p)
        rhs = ((trace * a - c) % p, (trace * b - d) % p, a % p, b % p)
        assert lhs == rhs


def test_make_torus_rejects_parabolic():
    with pytest.raises(ValueError):
        make_torus(2, 31)  # t^2 = 4
    with pytest.raises(ValueError):
        make_torus(29, 31)  # -2 mod 31


def test_generator_has_full_order():
    for trace in (0, 3):
        T = make_torus(trace, 31)
        g = T.generator
        m = np.eye(2, dtype=object)
        A = np.array([[g.a, g.b], [g.c, g.d]], dtype=object)
        order = 0
        for k in range(1, T.order + 1):
            m = (m @ A) % 31
            if np.array_equal(m, np.eye(2, dtype=object)):
                order = k
                break
        assert order == T.order


def test_torus_eigenbasis_structure():
    p = 31
    for trace, n_deg in ((3, 2), (0, 0)):  # split has 2 degenerate vectors
        T = make_torus(trace, p)
        basis = torus_eigenbasis(T)
        assert len(basis) == p
        A = np.stack([w.signal.samples for w in basis])
        assert np.abs(A @ A.conj().T - np.eye(p)).max() < 1e-8
        assert sum(w.degenerate for w in basis) == n_deg
        rho = rho_matrix(T.generator)
        for w in basis:
            assert abs(abs(w.eigenvalue) - 1.0) < 1e-9
            res = rho @ w.signal.samples - w.eigenvalue * w.signal.samples
            assert np.abs(res).max() < 1e-7


def nondegenerate(T):
    return [w for w in torus_eigenbasis(T) if not w.degenerate]


def test_weil_peaks_origin_value():
    T = make_torus(0, 31)
    for w in nondegenerate(T)[:5]:
        M = mf_full(w.signal, w.signal)
        assert np.abs(M.entries[0, 0] - 1.0) < 1e-9


def test_weil_peaks_nonsplit_bound():
    # nonsplit tori meet the 2/sqrt(p) envelope outright
    p = 31
    T = make_torus(0, p)
    assert T.kind == "nonsplit"
    worst = 0.0
    for w in nondegenerate(T):
        m = mf_full(w.signal, w.signal).magnitudes()
        m[0, 0] = 0.0
        worst = max(worst, m.max())
    assert worst <= 2 / np.sqrt(p) + 1e-9, worst


def test_weil_peaks_split_refined_bound():
    # split-torus eigenvectors live on p-1 support points; their exact
    # envelope is 2 sqrt(p)/(p-1), slightly above 2/sqrt(p)
    p = 31
    T = make_torus(3, p)
    assert T.kind == "split"
    worst = 0.0
    for w in nondegenerate(T):
        m = mf_full(w.signal, w.signal).magnitudes()
        m[0, 0] = 0.0
        worst = max(worst, m.max())
    assert worst <= 2 * np.sqrt(p) / (p - 1) + 1e-9, worst
    # regression: keep the measured ceiling from drifting up
    assert worst == pytest.approx(0.370412, abs=5e-4)


def test_weil_pair_bounds_exhaustive():
    p = 31
    split = nondegenerate(make_torus(3, p))
    nonsplit = nondegenerate(make_torus(0, p))
    refined = 2 * np.sqrt(p) / (p - 1) + 1e-9
    stated = 2 / np.sqrt(p) + 1e-9
    for group, bound in ((split, refined), (nonsplit, stated)):
        worst = 0.0
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                m = mf_full(group[i].signal, group[j].signal).magnitudes()
                worst = max(worst, m.max())
        assert worst <= bound, (len(group), worst)
    worst = 0.0
    for wa in split:
        for wb in nonsplit:
            worst = max(worst, mf_full(wa.signal, wb.signal).magnitudes().max())
    assert worst <= 4 / np.sqrt(p) + 1e-9, worst


# -------------------------------------------------------------------- flags

def test_flag_waveform_components():
    p = as_prime(101)
    L = Line(2, p)
    T = make_torus(0, 101)
    fl = flag_waveform(L, T, 3, 0)
    assert fl.line == L and fl.torus == T
    assert not fl.phiT.degenerate
    assert np.abs(fl.signal.samples
                  - (fl.fL.signal.samples + fl.phiT.signal.samples)).max() < 1e-12


def test_flag_waveform_rejects_degenerate_eigenvector():
    p = 101
    T = make_torus(0, p)  # split at p = 101
    assert T.kind == "split"
    basis = torus_eigenbasis(T)
    deg = [k for k, w in enumerate(basis) if w.degenerate]
    assert len(deg) == 2
    with pytest.raises(ValueError):
        flag_waveform(Line(0, as_prime(p)), T, 0, deg[0])


def test_flag_three_level_structure():
    p = 101
    pp = as_prime(p)
    flags = flag_family(p, 2, seed=0)
    for fl in flags:
        mags = mf_full(fl.signal, fl.signal).magnitudes()
        on_line = np.zeros((p, p), dtype=bool)
        for v in line_points(fl.line):
            on_line[v.tau, v.omega] = True
        assert abs(mags[0, 0] - 2.0) <= 4 / np.sqrt(p)
        assert mags[~on_line].max() <= 6 / np.sqrt(p)
        on_line[0, 0] = False  # the p-1 non-origin line cells sit near 1
        assert np.abs(mags[on_line] - 1.0).max() <= 6 / np.sqrt(p)


def test_default_torus_roster():
    roster = default_torus_roster(101, 5)
    assert len(roster) == 5
    kinds = {T.kind for T in roster}
    assert kinds == {"split", "nonsplit"}
    gens = {(T.generator.a, T.generator.b, T.generator.c, T.generator.d)
            for T in roster}
    assert len(gens) == 5  # distinct tori


def test_flag_family_deterministic():
    fam = flag_family(101, 3, seed=5)
    assert len(fam) == 3
    assert len({f.line for f in fam}) == 3  # distinct carrier lines
    fam2 = flag_family(101, 3, seed=5)
    for a, b in zip(fam, fam2):
        assert np.array_equal(a.signal.samples, b.signal.samples)
    assert all(not f.phiT.degenerate for f in fam)
