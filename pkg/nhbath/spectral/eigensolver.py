"""Dense non-Hermitian eigensolver with biorthonormal left/right eigenvectors.

LAPACK `zgeev` does the work: Hessenberg reduction followed by shifted QR
with an iteration cap proportional to the dimension. Left vectors are then
rescaled so that `left[:, m].conj() @ right[:, n] == delta(m, n)`; inside a
cluster of (nearly) degenerate eigenvalues this takes a block Gram-Schmidt
step.
"""

from __future__ import annotations

from dataclasses import dataclass
import re

import numpy as np
from numpy.typing import NDArray
import scipy.linalg
from scipy.sparse import csr_array
from scipy.sparse.csgraph import connected_components

from ..model import SystemMatrix
from ..errors.numeric import InvalidParameter, NoConvergence
from ..logging import logger

log = logger()

CLUSTER_TOLERANCE = 1e-8


@dataclass(frozen=True)
class ComplexSpectrum:
    """Eigenvalues sorted by real, then imaginary part, with right and left
    eigenvectors stored as columns."""
    eigenvalues: NDArray[np.complex128]
    right_vectors: NDArray[np.complex128]
    left_vectors: NDArray[np.complex128]

    def __len__(self) -> int:
        return self.eigenvalues.shape[0]

    def biorthogonality_error(self) -> float:
        overlap = self.left_vectors.conj().T @ self.right_vectors
        return float(np.max(np.abs(overlap - np.eye(len(self)))))

    def condition_number(self) -> float:
        """Condition number of the right eigenvector matrix; large values
        signal a (nearly) defective matrix."""
        return float(np.linalg.cond(self.right_vectors))

    def projector_weights(self, rows: slice | list[int]) -> NDArray[np.float64]:
        """Weight of each right eigenvector on the given basis rows, for unit
        normalized right vectors."""
        return np.sum(np.abs(self.right_vectors[rows, :]) ** 2, axis=0)


def clusters(eigenvalues: NDArray[np.complex128], tol: float) -> list[NDArray[np.intp]]:
    """Index groups of eigenvalues chained together by distances below `tol`."""
    distance = np.abs(eigenvalues[:, None] - eigenvalues[None, :])
    n, labels = connected_components(csr_array(distance < tol), directed=False)
    return [np.flatnonzero(labels == c) for c in range(n)]


def _biorthonormalize(
    eigenvalues: NDArray[np.complex128],
    left: NDArray[np.complex128],
    right: NDArray[np.complex128],
    tol: float,
) -> NDArray[np.complex128]:
    left = left.copy()
    for idx in clusters(eigenvalues, tol):
        overlap = left[:, idx].conj().T @ right[:, idx]
        if idx.size > 1:
            log.debug("biorthogonalizing a cluster of %d eigenvalues near %s",
                      idx.size, eigenvalues[idx[0]])
        left[:, idx] = left[:, idx] @ np.linalg.pinv(overlap).conj().T
    return left


def obc_spectrum(
    matrix: SystemMatrix | NDArray[np.complex128], cluster_tol: float = CLUSTER_TOLERANCE
) -> ComplexSpectrum:
    """Full eigendecomposition of a finite complex matrix."""
    a = matrix.entries if isinstance(matrix, SystemMatrix) else np.asarray(matrix, dtype=np.complex128)
    if not np.all(np.isfinite(a)):
        raise InvalidParameter("matrix", "non-finite entries", "a finite matrix")

    try:
        w, vl, vr = scipy.linalg.eig(a, left=True, right=True, check_finite=False)
    except np.linalg.LinAlgError as e:
        found = re.search(r"(\d+)", str(e))
        raise NoConvergence("eigensolver", int(found.group(1)) if found else None) from e

    order = np.lexsort((w.imag, w.real))
    w = w[order].astype(np.complex128)
    vr = vr[:, order].astype(np.complex128)
    vl = vl[:, order].astype(np.complex128)
    vr /= np.linalg.norm(vr, axis=0)
    vl = _biorthonormalize(w, vl, vr, cluster_tol)
    return ComplexSpectrum(w, vr, vl)
