"""Measurement objective, brute-force optimizer, CCS construction,
discrimination bridge, and the entropic cross-check."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from buresdiscord.discord_core import (
    GridConfig,
    MeasurementDirection,
    QsdEnsemble,
    ccs_from_measurement,
    entropic_discord,
    fidelity_at_direction,
    helstrom_success,
    induced_ensemble,
    lambda_matrix,
    max_fidelity_bruteforce,
    mutual_information,
)
from buresdiscord.errors import InvalidParams
from buresdiscord.linalg import (
    I4,
    check_density_matrix,
    fidelity,
    herm_eig,
    psd_sqrt,
    trace_norm,
)
from buresdiscord.sampling import (
    random_classical_params,
    random_direction,
    random_state,
    random_x_params,
)
from buresdiscord.states import XStateParams, classical_state, werner_params, x_state

BELL = x_state(XStateParams(0.5, 0.0, 0.0, 0.5, y=0.5))


class TestMeasurementDirection:
    def test_from_angles(self):
        d = MeasurementDirection.from_angles(np.pi / 2.0, 0.0)
        assert_allclose(d.u, [1.0, 0.0, 0.0], atol=1e-15)

    def test_angles_round_trip(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            u = random_direction(rng)
            d = MeasurementDirection(tuple(u))
            back = MeasurementDirection.from_angles(d.theta, d.psi)
            assert np.abs(np.asarray(back.u) - u).max() < 1e-12

    def test_sigma_is_hermitian_involution(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            sig = MeasurementDirection(tuple(random_direction(rng))).sigma()
            assert np.abs(sig - sig.conj().T).max() < 1e-14
            assert np.abs(sig @ sig - np.eye(2)).max() < 1e-13

    def test_rejects_non_unit(self):
        with pytest.raises(InvalidParams):
            MeasurementDirection((1.0, 1.0, 0.0))


class TestLambdaMatrix:
    def test_trace_is_a_bloch_component(self):
        # tr L(u) equals the A-side Bloch vector dotted with u
        rng = np.random.default_rng(5)
        for _ in range(50):
            rho = random_state(rng)
            u = random_direction(rng)
            lam = lambda_matrix(rho, MeasurementDirection(tuple(u)))
            sig = MeasurementDirection(tuple(u)).sigma()
            expect = np.trace(rho @ np.kron(sig, np.eye(2))).real
            assert abs(np.trace(lam).real - expect) < 1e-12

    def test_eigenvalues_match_product_operator(self):
        # L(u) shares its spectrum with (sigma_u x I) rho
        rng = np.random.default_rng(6)
        for _ in range(50):
            rho = random_state(rng)
            d = MeasurementDirection(tuple(random_direction(rng)))
            lam_eigs = herm_eig(lambda_matrix(rho, d)).eigenvalues
            prod = np.kron(d.sigma(), np.eye(2)) @ rho
            prod_eigs = np.sort(np.linalg.eigvals(prod).real)[::-1]
            assert np.abs(lam_eigs - prod_eigs).max() < 1e-10


class TestObjective:
    def test_full_rank_trace_norm_identity(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            rho = random_state(rng)
            d = MeasurementDirection(tuple(random_direction(rng)))
            expect = 0.5 * (1.0 + trace_norm(lambda_matrix(rho, d)))
            assert abs(fidelity_at_direction(rho, d) - expect) < 1e-9

    def test_even_under_flip(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            rho = random_state(rng)
            u = random_direction(rng)
            f1 = fidelity_at_direction(rho, MeasurementDirection(tuple(u)))
            f2 = fidelity_at_direction(rho, MeasurementDirection(tuple(-u)))
            assert abs(f1 - f2) < 1e-11

    def test_at_least_half(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            f = fidelity_at_direction(random_state(rng),
                                      MeasurementDirection(tuple(random_direction(rng))))
            assert f >= 0.5 - 1e-12

    def test_bell_is_flat_half(self):
        rng = np.random.default_rng(10)
        for _ in range(20):
            d = MeasurementDirection(tuple(random_direction(rng)))
            assert abs(fidelity_at_direction(BELL, d) - 0.5) < 1e-12

    def test_matches_ccs_fidelity(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            rho = random_state(rng)
            d = MeasurementDirection(tuple(random_direction(rng)))
            ccs = ccs_from_measurement(rho, d)
            assert abs(ccs.fidelity_check - fidelity_at_direction(rho, d)) < 1e-8


class TestBruteForce:
    def test_maximally_mixed(self):
        res = max_fidelity_bruteforce(I4 / 4.0)
        assert abs(res.fidelity - 1.0) < 1e-10
        assert res.discord < 1e-10
        assert res.degenerate_family == "free_sphere"

    def test_bell_value_and_flat_family(self):
        res = max_fidelity_bruteforce(BELL)
        assert abs(res.fidelity - 0.5) < 1e-10
        assert abs(res.discord - (2.0 - np.sqrt(2.0))) < 1e-9
        assert res.degenerate_family == "free_sphere"

    def test_werner_free_sphere(self):
        res = max_fidelity_bruteforce(x_state(werner_params(0.5)))
        expect = 0.5 + 0.125 + np.sqrt(0.125 * 0.625)
        assert abs(res.fidelity - expect) < 1e-9
        assert res.degenerate_family == "free_sphere"

    def test_family_tags_discriminate(self):
        # a generic state must not be tagged as having a flat optimum set,
        # and a genuinely free psi circle must be detected
        generic = XStateParams(a=0.4, b=0.3, c=0.2, d=0.1, x=0.05, y=0.1)
        assert max_fidelity_bruteforce(x_state(generic)).degenerate_family is None
        equatorial = XStateParams(a=0.2, b=0.3, c=0.3, d=0.2, x=0.25, y=0.0)
        res = max_fidelity_bruteforce(x_state(equatorial))
        assert res.degenerate_family == "free_psi"
        fixed_psi = XStateParams(a=0.2, b=0.3, c=0.3, d=0.2, x=0.2, y=0.1)
        assert max_fidelity_bruteforce(x_state(fixed_psi)).degenerate_family is None

    def test_classical_states_have_zero_discord(self):
        rng = np.random.default_rng(12)
        for _ in range(20):
            rho = classical_state(random_classical_params(rng))
            res = max_fidelity_bruteforce(rho)
            assert res.discord <= 1e-6

    def test_beats_every_grid_direction(self):
        rng = np.random.default_rng(13)
        rho = x_state(random_x_params(rng))
        res = max_fidelity_bruteforce(rho)
        for _ in range(200):
            d = MeasurementDirection(tuple(random_direction(rng)))
            assert fidelity_at_direction(rho, d) <= res.fidelity + 1e-7

    def test_discord_consistency(self):
        rng = np.random.default_rng(14)
        res = max_fidelity_bruteforce(x_state(random_x_params(rng)))
        assert abs(res.discord - 2.0 * (1.0 - np.sqrt(res.fidelity))) < 1e-12

    def test_grid_floor_enforced(self):
        with pytest.raises(InvalidParams):
            GridConfig(n_theta=8, n_phi=16)

    def test_deterministic(self):
        rng = np.random.default_rng(15)
        rho = x_state(random_x_params(rng))
        a = max_fidelity_bruteforce(rho)
        b = max_fidelity_bruteforce(rho)
        assert a.fidelity == b.fidelity
        assert a.optimal_directions == b.optimal_directions


class TestCcs:
    def test_unit_trace_and_psd(self):
        rng = np.random.default_rng(16)
        for _ in range(30):
            rho = random_state(rng)
            d = MeasurementDirection(tuple(random_direction(rng)))
            ccs = ccs_from_measurement(rho, d)
            check_density_matrix(ccs.state)

    def test_ccs_is_a_classical(self):
        # measuring along the construction axis leaves the state fixed
        rng = np.random.default_rng(17)
        for _ in range(10):
            rho = random_state(rng)
            d = MeasurementDirection(tuple(random_direction(rng)))
            ccs = ccs_from_measurement(rho, d)
            res = max_fidelity_bruteforce(ccs.state)
            assert res.discord <= 1e-6

    def test_two_tuple_unpacking(self):
        state, check = ccs_from_measurement(I4 / 4.0, MeasurementDirection((0.0, 0.0, 1.0)))
        assert state.shape == (4, 4)
        assert abs(check - 1.0) < 1e-12

    def test_classical_input_is_fixed_point(self):
        rng = np.random.default_rng(18)
        cp = random_classical_params(rng)
        rho = classical_state(cp)
        ccs = ccs_from_measurement(rho, MeasurementDirection(tuple(cp.r)))
        assert np.abs(ccs.state - rho).max() < 1e-10
        assert abs(ccs.fidelity_check - 1.0) < 1e-10

    def test_degenerate_projector_flagged(self):
        # Bell at any axis gives L(u) = 0, so the projector cut is ambiguous
        ccs = ccs_from_measurement(BELL, MeasurementDirection((0.0, 0.0, 1.0)))
        assert ccs.degenerate_projector
        # I/4 at z has eigenvalues (1/4, 1/4, -1/4, -1/4): the cut is sharp
        sharp = ccs_from_measurement(I4 / 4.0, MeasurementDirection((0.0, 0.0, 1.0)))
        assert not sharp.degenerate_projector


class TestDiscrimination:
    def test_bridge_identity(self):
        rng = np.random.default_rng(19)
        for _ in range(200):
            rho = random_state(rng)
            d = MeasurementDirection(tuple(random_direction(rng)))
            ens = induced_ensemble(rho, d)
            assert abs(helstrom_success(ens) - fidelity_at_direction(rho, d)) < 1e-9

    def test_orthogonal_states_perfectly_distinguishable(self):
        ens = QsdEnsemble(
            priors=(0.5, 0.5),
            rho0=np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex),
            rho1=np.diag([0.0, 1.0, 0.0, 0.0]).astype(complex),
        )
        assert abs(helstrom_success(ens) - 1.0) < 1e-12

    def test_identical_states_give_prior(self):
        ens = QsdEnsemble(priors=(0.7, 0.3), rho0=I4 / 4.0, rho1=I4 / 4.0)
        assert abs(helstrom_success(ens) - 0.7) < 1e-12

    def test_maximally_mixed_ensemble(self):
        # both induced states equal I/4, so success is the larger prior;
        # for I/4 the priors are (1/2, 1/2) at every direction
        ens = induced_ensemble(I4 / 4.0, MeasurementDirection((0.0, 0.0, 1.0)))
        assert_allclose(ens.priors, [0.5, 0.5], atol=1e-13)
        assert abs(helstrom_success(ens) - 1.0) < 1e-12

    def test_vanishing_prior_branch(self):
        # A-side pure state pointing at +z: the -z outcome never fires
        rho = np.kron(np.diag([1.0, 0.0]), np.eye(2) / 2.0).astype(complex)
        ens = induced_ensemble(rho, MeasurementDirection((0.0, 0.0, 1.0)))
        assert ens.priors[1] < 1e-12
        assert abs(helstrom_success(ens) - 1.0) < 1e-10


class TestEntropic:
    def test_bell_values(self):
        cc, disc = entropic_discord(BELL)
        assert abs(cc - 1.0) < 1e-6
        assert abs(disc - 1.0) < 1e-6

    def test_product_state_no_correlations(self):
        rho = np.kron(np.diag([0.7, 0.3]), np.diag([0.6, 0.4])).astype(complex)
        assert abs(mutual_information(rho)) < 1e-10
        cc, disc = entropic_discord(rho)
        assert abs(cc) < 1e-6 and abs(disc) < 1e-6

    def test_classical_state_zero_discord(self):
        rng = np.random.default_rng(20)
        rho = classical_state(random_classical_params(rng))
        cc, disc = entropic_discord(rho)
        assert abs(disc) < 1e-6
        assert cc >= -1e-9

    def test_additivity(self):
        rng = np.random.default_rng(21)
        rho = random_state(rng)
        cc, disc = entropic_discord(rho)
        assert abs((cc + disc) - mutual_information(rho)) < 1e-10
