"""Seedable sampling of Haar-random unitary matrices.

Every sample is a pure function of ``(n, master_seed, sample_index)``:
each index gets its own counter-based stream, so a run partitioned over
any number of workers reproduces the single-threaded result bit for bit.
"""

import numpy as np

__all__ = ["haar_unitary", "sample_generator"]


def sample_generator(master_seed: int, sample_index: int) -> np.random.Generator:
    """Return the RNG stream for one sample of a seeded experiment.

    The stream is derived by spawning a child of ``SeedSequence(master_seed)``
    keyed on ``sample_index`` and feeding it to the counter-based Philox
    generator. Streams for distinct indices are statistically independent
    and do not depend on evaluation order.
    """
    seq = np.random.SeedSequence(int(master_seed), spawn_key=(int(sample_index),))
    return np.random.Generator(np.random.Philox(seq))


def haar_unitary(n: int, master_seed: int, sample_index: int = 0) -> np.ndarray:
    """Draw an ``n x n`` unitary from the Haar measure on U(n).

    Uses the Ginibre + QR construction: fill a matrix with i.i.d. standard
    complex Gaussians, take its QR decomposition, and multiply each column
    of Q by the phase of the matching diagonal entry of R. Without the
    phase fix the QR convention biases the distribution; with it the result
    is exactly Haar.

    Args:
        n: matrix dimension (number of optical modes), at least 1.
        master_seed: 64-bit experiment seed.
        sample_index: nonnegative index of the draw within the experiment.

    Returns:
        Complex ``(n, n)`` array with U^dag U = I to machine precision.
    """
    if n < 1:
        raise ValueError(f"mode count must be >= 1, got {n}")
    if sample_index < 0:
        raise ValueError(f"sample_index must be >= 0, got {sample_index}")
    rng = sample_generator(master_seed, sample_index)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
