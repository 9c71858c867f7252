"""Seeded numerical search for unbiased basis families in any dimension.

Alternating optimization: one basis at a time takes a gradient step on
the unbiasedness objective and is re-orthonormalized by polar
decomposition; restarts begin from Haar-random unitaries.  Everything is
derived deterministically from (seed, restart index).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .constructions import MubFamily, to_unitary_matrices
from .errors import InvalidTargetError, MubkitError
from .verifier import verify_float, verify_unitary_set

SUCCESS_THRESHOLD = 1e-12


@dataclass(frozen=True)
class SearchConfig:
    dimension: int
    target: int
    restarts: int = 20
    max_iterations: int = 3000
    step_initial: float = 0.75
    step_decay: float = 0.998
    seed: int = 0
    fixed_prefix: MubFamily | None = None

    def to_doc(self) -> dict:
        from .constructions import export_family

        return {
            "dimension": self.dimension,
            "target": self.target,
            "restarts": self.restarts,
            "max_iterations": self.max_iterations,
            "step_initial": self.step_initial,
            "step_decay": self.step_decay,
            "seed": self.seed,
            "fixed_prefix": (
                export_family(self.fixed_prefix) if self.fixed_prefix else None
            ),
        }


@dataclass
class SearchResult:
    objective: float
    bases: list
    converged: bool
    iterations: int
    restart_index: int
    seed: int
    per_pair_deviation: list
    config: SearchConfig
    trajectories: list = field(repr=False, default_factory=list)

    def to_doc(self) -> dict:
        return {
            "config": self.config.to_doc(),
            "seed": self.seed,
            "objective": self.objective,
            "converged": self.converged,
            "iterations": self.iterations,
            "restart_index": self.restart_index,
            "per_pair_deviation": self.per_pair_deviation,
            "bases": [
                [[[float(v.real), float(v.imag)] for v in row] for row in u]
                for u in self.bases
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), sort_keys=True, separators=(",", ":")) + "\n"


def objective(bases) -> float:
    """Sum over basis pairs and vector pairs of (|<b, b'>|^2 - 1/d)^2."""
    if not bases:
        return 0.0
    d = bases[0].shape[0]
    for u in bases:
        if u.shape != (d, d):
            raise MubkitError("bases must share one dimension")
    total = 0.0
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            gram = np.abs(bases[i].conj().T @ bases[j]) ** 2
            total += float(np.sum((gram - 1.0 / d) ** 2))
    return total


def objective_gradient(bases, index: int) -> np.ndarray:
    """Conjugate (Wirtinger) gradient of the objective in bases[index].

    The full real-parameter gradient is (2*Re(G), 2*Im(G)) of the
    returned matrix G, which the finite-difference test relies on.
    """
    u = bases[index]
    d = u.shape[0]
    grad = np.zeros_like(u)
    for j, v in enumerate(bases):
        if j == index:
            continue
        gram = u.conj().T @ v
        weight = 2.0 * (np.abs(gram) ** 2 - 1.0 / d) * np.conj(gram)
        grad += v @ weight.T
    return grad


def polar_factor(mat: np.ndarray) -> np.ndarray:
    """Closest unitary matrix (polar decomposition via SVD)."""
    w, _, vh = np.linalg.svd(mat)
    return w @ vh


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary: QR of a complex Gaussian, phases fixed."""
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def pair_deviations(bases) -> list:
    """[(i, j, max deviation)] against the orthonormal/unbiased targets."""
    out = []
    d = bases[0].shape[0] if bases else 0
    eye = np.eye(d)
    for i in range(len(bases)):
        for j in range(i, len(bases)):
            gram = np.abs(bases[i].conj().T @ bases[j]) ** 2
            target = eye if i == j else 1.0 / d
            out.append([i, j, float(np.max(np.abs(gram - target)))])
    return out


def search(config: SearchConfig) -> SearchResult:
    """Best family found over seeded random restarts with local descent."""
    d = config.dimension
    if d < 1:
        raise MubkitError("dimension must be positive")
    if config.target > d + 1:
        raise InvalidTargetError(f"target {config.target} exceeds bound {d + 1}")
    if config.restarts < 1:
        raise MubkitError("need at least one restart")
    fixed = to_unitary_matrices(config.fixed_prefix) if config.fixed_prefix else []
    if config.fixed_prefix is not None and config.fixed_prefix.dimension != d:
        raise MubkitError("fixed prefix dimension differs from search dimension")
    n_free = config.target - len(fixed)
    if n_free < 0:
        raise InvalidTargetError(
            f"target {config.target} below the fixed prefix size {len(fixed)}"
        )

    best_obj = None
    best_bases = fixed
    best_iter = 0
    best_restart = 0
    trajectories = []
    for restart in range(config.restarts):
        rng = np.random.default_rng([config.seed, restart])
        bases = list(fixed) + [haar_unitary(d, rng) for _ in range(n_free)]
        obj = objective(bases)
        r_best, r_bases, r_iter = obj, [b.copy() for b in bases], 0
        traj = [obj]
        if n_free:
            step = config.step_initial
            for it in range(1, config.max_iterations + 1):
                for bi in range(len(fixed), len(bases)):
                    grad = objective_gradient(bases, bi)
                    bases[bi] = polar_factor(bases[bi] - step * grad)
                step *= config.step_decay
                obj = objective(bases)
                if obj < r_best:
                    r_best = obj
                    r_bases = [b.copy() for b in bases]
                    r_iter = it
                traj.append(r_best)
                if r_best < SUCCESS_THRESHOLD:
                    break
        trajectories.append(traj)
        if best_obj is None or r_best < best_obj:
            best_obj, best_bases, best_iter, best_restart = (
                r_best, r_bases, r_iter, restart,
            )
        if best_obj < SUCCESS_THRESHOLD:
            break
    if best_obj is None:
        best_obj = objective(best_bases)
    return SearchResult(
        objective=best_obj,
        bases=best_bases,
        converged=best_obj < SUCCESS_THRESHOLD,
        iterations=best_iter,
        restart_index=best_restart,
        seed=config.seed,
        per_pair_deviation=pair_deviations(best_bases),
        config=config,
        trajectories=trajectories,
    )


def extend_family(family: MubFamily, extra: int, config: SearchConfig) -> SearchResult:
    """Search for `extra` additional bases unbiased against a frozen family."""
    if extra < 0:
        raise InvalidTargetError("extra must be nonnegative")
    if not verify_float(family, 1e-6).certified:
        raise MubkitError("prefix family fails float verification at 1e-6")
    cfg = SearchConfig(
        dimension=family.dimension,
        target=len(family.bases) + extra,
        restarts=config.restarts,
        max_iterations=config.max_iterations,
        step_initial=config.step_initial,
        step_decay=config.step_decay,
        seed=config.seed,
        fixed_prefix=family,
    )
    return search(cfg)


def check_converged_result(result: SearchResult, tol: float = 1e-6) -> bool:
    """Converged results must pass the float verifier at the given tolerance."""
    return verify_unitary_set(result.bases, tol).certified
