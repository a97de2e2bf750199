from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class BlockSample:
    """
    A batch of channel uses of the block phase channel.

    Arrays have shape (count, L) except ``theta``, which has shape (count,):
    ``received = s * exp(j theta) + noise`` row by row. ``indices`` are the constellation
    point indices of ``s``.
    """

    indices: np.ndarray
    s: np.ndarray
    theta: np.ndarray
    noise: np.ndarray
    received: np.ndarray

    @property
    def count(self):
        """Number of blocks."""
        return self.s.shape[0]

    @property
    def block_len(self):
        """Symbols per block L."""
        return self.s.shape[1]
