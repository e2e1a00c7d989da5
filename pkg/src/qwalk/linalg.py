"""Dense complex matrices, Hermitian eigendecomposition with eigenvalue
clustering into spectral projectors, and spectral-form matrix exponentials.

The eigensolver works on the real-symmetric embedding
[[Re H, -Im H], [Im H, Re H]] of dimension 2n.  Spectral projectors of the
embedding are themselves embeddings of the complex projectors (they are
polynomials in the embedded matrix), so each complex projector is read off
directly from the corresponding real one; eigenvalues come out doubled and
are deduplicated by the clustering step.
"""

from __future__ import annotations

import json
import warnings

import numpy as np

DEFAULT_CLUSTER_TOL = 1e-8
HERMITIAN_TOL = 1e-12
PROJECTOR_TOL = 1e-9
RECONSTRUCTION_TOL = 1e-8
MAX_KRON_DIM = 4096


class NotSquare(ValueError):
    pass


class NotHermitian(ValueError):
    pass


class DimensionOverflow(ValueError):
    pass


class EigensolverFailure(RuntimeError):
    pass


class ClusterAmbiguityWarning(UserWarning):
    """Two eigenvalue clusters are separated by less than 10x cluster_tol."""


def _max_abs(a) -> float:
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


class ComplexMatrix:
    """Square complex matrix with finite entries; read-only storage."""

    def __init__(self, entries):
        arr = np.array(entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise NotSquare(f"expected a square matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("matrix entries must be finite")
        arr.setflags(write=False)
        self._arr = arr

    @property
    def dim(self) -> int:
        return self._arr.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self._arr

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self._arr, dtype=dtype)

    def __getitem__(self, idx):
        return self._arr[idx]

    def __repr__(self) -> str:
        return f"ComplexMatrix(dim={self.dim})"

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "re": self._arr.real.tolist(),
                "im": self._arr.imag.tolist()}

    @classmethod
    def from_json(cls, d: dict) -> "ComplexMatrix":
        re = np.array(d["re"], dtype=float)
        im = np.array(d["im"], dtype=float)
        if re.shape != (d["dim"], d["dim"]) or im.shape != re.shape:
            raise ValueError("re/im blocks do not match declared dim")
        return cls(re + 1j * im)

    def dump(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)

    @classmethod
    def load(cls, path) -> "ComplexMatrix":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


class HermitianMatrix:
    """Hermitian matrix; construct through hermitian_from_entries."""

    def __init__(self, inner: ComplexMatrix):
        self.inner = inner

    @property
    def dim(self) -> int:
        return self.inner.dim

    @property
    def array(self) -> np.ndarray:
        return self.inner.array

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.inner.array, dtype=dtype)

    def __getitem__(self, idx):
        return self.inner[idx]

    def __repr__(self) -> str:
        return f"HermitianMatrix(dim={self.dim})"

    def to_json(self) -> dict:
        return self.inner.to_json()

    @classmethod
    def from_json(cls, d: dict) -> "HermitianMatrix":
        return hermitian_from_entries(ComplexMatrix.from_json(d).array)


def hermitian_from_entries(entries, tol: float = HERMITIAN_TOL) -> HermitianMatrix:
    """Validate near-Hermitian input and return the symmetrization
    (A + A*)/2 with an exactly real diagonal."""
    mat = ComplexMatrix(entries)
    a = mat.array
    asym = _max_abs(a - a.conj().T)
    if asym > tol:
        raise NotHermitian(f"asymmetry {asym:.3e} exceeds tolerance {tol:.1e}")
    sym = (a + a.conj().T) / 2
    np.fill_diagonal(sym, sym.diagonal().real)
    return HermitianMatrix(ComplexMatrix(sym))


class SpectralDecomposition:
    """Distinct eigenvalues with orthogonal projectors: H = sum theta_r E_r."""

    def __init__(self, eigenvalues, projectors, cluster_tol, ambiguous_gaps=()):
        self.eigenvalues = np.asarray(eigenvalues, dtype=float)
        self.projectors = []
        for p in projectors:
            arr = np.asarray(p, dtype=complex)
            arr.setflags(write=False)
            self.projectors.append(arr)
        self.cluster_tol = float(cluster_tol)
        self.ambiguous_gaps = tuple(ambiguous_gaps)

    @property
    def dim(self) -> int:
        return self.projectors[0].shape[0]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @property
    def multiplicities(self) -> list[int]:
        return [int(round(float(np.trace(p).real))) for p in self.projectors]

    def matrix(self) -> np.ndarray:
        return sum(t * p for t, p in zip(self.eigenvalues, self.projectors))

    def validate(self, projector_tol: float = PROJECTOR_TOL,
                 reconstruction_tol: float = RECONSTRUCTION_TOL,
                 against=None) -> None:
        """Check the projector algebra, completeness, Hermitian-ness, strict
        eigenvalue separation, and (optionally) reconstruction of a target."""
        d = len(self.eigenvalues)
        n = self.dim
        for r in range(d):
            er = self.projectors[r]
            if _max_abs(er - er.conj().T) > projector_tol:
                raise EigensolverFailure(f"projector {r} is not Hermitian")
            for s in range(r, d):
                prod = er @ self.projectors[s]
                target = er if r == s else 0
                if _max_abs(prod - target) > projector_tol:
                    raise EigensolverFailure(
                        f"projector algebra violated at pair ({r}, {s})")
        if _max_abs(sum(self.projectors) - np.eye(n)) > projector_tol:
            raise EigensolverFailure("projectors do not resolve the identity")
        gaps = np.diff(self.eigenvalues)
        if len(gaps) and float(np.min(gaps)) <= self.cluster_tol:
            raise EigensolverFailure("eigenvalue clusters are not separated")
        if against is not None:
            err = _max_abs(self.matrix() - np.asarray(against))
            if err > reconstruction_tol:
                raise EigensolverFailure(
                    f"reconstruction error {err:.3e} exceeds {reconstruction_tol:.1e}")


def spectral_decomposition(h, cluster_tol: float = DEFAULT_CLUSTER_TOL,
                           validate: bool = True) -> SpectralDecomposition:
    """Eigendecompose a Hermitian matrix, clustering nearby eigenvalues into
    a single projector each (multiplicities detected, never assumed)."""
    if cluster_tol <= 0:
        raise ValueError("cluster_tol must be positive")
    arr = np.asarray(h, dtype=complex)
    if isinstance(h, HermitianMatrix):
        herm = h
    else:
        herm = hermitian_from_entries(arr)
    a = herm.array
    n = herm.dim
    embed = np.block([[a.real, -a.imag], [a.imag, a.real]])
    try:
        w, v = np.linalg.eigh(embed)
    except np.linalg.LinAlgError as exc:
        raise EigensolverFailure(str(exc)) from exc

    clusters: list[list[int]] = [[0]]
    for i in range(1, 2 * n):
        if w[i] - w[clusters[-1][-1]] <= cluster_tol:
            clusters[-1].append(i)
        else:
            clusters.append([i])

    eigenvalues = []
    projectors = []
    for idx in clusters:
        block = v[:, idx]
        real_proj = block @ block.T
        e = real_proj[:n, :n] + 1j * real_proj[n:, :n]
        e = (e + e.conj().T) / 2
        eigenvalues.append(float(np.mean(w[idx])))
        projectors.append(e)

    ambiguous = []
    for r in range(len(eigenvalues) - 1):
        gap = eigenvalues[r + 1] - eigenvalues[r]
        if gap < 10 * cluster_tol:
            ambiguous.append((r, r + 1, gap))
    if ambiguous:
        warnings.warn(
            f"{len(ambiguous)} eigenvalue gap(s) within 10x cluster_tol; "
            "clustering may be ambiguous", ClusterAmbiguityWarning)

    dec = SpectralDecomposition(eigenvalues, projectors, cluster_tol, ambiguous)
    if validate:
        dec.validate(against=a)
    return dec


def transition_matrix(dec: SpectralDecomposition, t: float) -> ComplexMatrix:
    """U(t) = sum_r exp(-i t theta_r) E_r."""
    n = dec.dim
    u = np.zeros((n, n), dtype=complex)
    for theta, proj in zip(dec.eigenvalues, dec.projectors):
        u += np.exp(-1j * t * theta) * proj
    return ComplexMatrix(u)


def kron(a, b, max_dim: int = MAX_KRON_DIM) -> ComplexMatrix:
    """Kronecker product with a guard on the output dimension."""
    aa = np.asarray(a, dtype=complex)
    bb = np.asarray(b, dtype=complex)
    out_dim = aa.shape[0] * bb.shape[0]
    if out_dim > max_dim:
        raise DimensionOverflow(
            f"kron output dimension {out_dim} exceeds limit {max_dim}")
    return ComplexMatrix(np.kron(aa, bb))
