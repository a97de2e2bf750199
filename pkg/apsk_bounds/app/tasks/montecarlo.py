"""
Chunked, order independent Monte Carlo averaging.

Samples are drawn in blocks of settings.STREAM_BLOCK_SIZE; block b always draws from
``mc.stream.child(b)``. Chunks of whole blocks are scheduled on a thread pool and the
per-block partial moments are merged in block order, so the result is bit-identical for
any chunk size and any number of workers.
"""
import logging
import math

from concurrent.futures import ThreadPoolExecutor
from gettext import gettext as _

import numpy as np

from apsk_bounds.app import settings
from apsk_bounds.app.constants import NO_SAMPLES_MESSAGE
from apsk_bounds.app.models import CapacityEstimate
from apsk_bounds.app.numerics import NumericsError


log = logging.getLogger(__name__)


class EstimatorError(RuntimeError):
    """
    Exception to signal that a Monte Carlo estimate could not be computed.
    """

    def __init__(self, operation, detail, *args, **kwargs):
        """
        Exception to signal that a Monte Carlo estimate could not be computed.
        """
        super().__init__("{} failed: {}".format(operation, detail), *args, **kwargs)


class _Moments:
    __slots__ = ("count", "mean", "m2")

    def __init__(self, count=0, mean=0.0, m2=0.0):
        self.count = count
        self.mean = mean
        self.m2 = m2

    @classmethod
    def of(cls, values):
        mean = float(np.mean(values))
        return cls(values.shape[0], mean, float(np.sum((values - mean) ** 2)))

    def update(self, other):
        # Pairwise update of Chan et al.
        total = self.count + other.count
        delta = other.mean - self.mean
        self.mean += delta * other.count / total
        self.m2 += other.m2 + delta * delta * self.count * other.count / total
        self.count = total


def _block_layout(samples, chunk_size):
    block = settings.STREAM_BLOCK_SIZE
    n_blocks = -(-samples // block)
    blocks_per_chunk = max(1, -(-chunk_size // block))
    sizes = [min(block, samples - index * block) for index in range(n_blocks)]
    chunks = [
        range(start, min(start + blocks_per_chunk, n_blocks))
        for start in range(0, n_blocks, blocks_per_chunk)
    ]
    return sizes, chunks


def run_monte_carlo(operation, kernel, mc):
    """
    Average a per-sample quantity over ``mc.samples`` draws.

    Args:
        operation (str): Name used in log and error messages.
        kernel (callable): ``kernel(generator, count)`` draws ``count`` samples from the
            numpy Generator and returns their values as a float array of length ``count``.
        mc (McConfig): Sample count, stream and scheduling.

    Returns:
        CapacityEstimate: Mean, standard error and sample count.

    Raises:
        EstimatorError: If the kernel produced non-finite values or a worker failed.

    """
    if mc.samples < 1:
        raise EstimatorError(operation, _(NO_SAMPLES_MESSAGE))
    sizes, chunks = _block_layout(mc.samples, mc.chunk_size)

    def run_chunk(blocks):
        partials = []
        for index in blocks:
            try:
                values = np.asarray(kernel(mc.stream.child(index).generator(), sizes[index]))
            except NumericsError as error:
                raise EstimatorError(operation, str(error)) from error
            if values.shape != (sizes[index],):
                raise EstimatorError(
                    operation,
                    _("kernel returned shape {}, expected ({},)").format(
                        values.shape, sizes[index]
                    ),
                )
            if not np.all(np.isfinite(values)):
                raise EstimatorError(
                    operation, _("non-finite sample values in block {}").format(index)
                )
            partials.append(_Moments.of(values))
        log.debug(
            _("{}: blocks {}-{} done").format(operation, blocks.start, blocks.stop - 1)
        )
        return partials

    def guarded_chunk(blocks):
        try:
            return run_chunk(blocks)
        except EstimatorError:
            raise
        except Exception as exc:
            raise EstimatorError(operation, repr(exc)) from exc

    if mc.workers == 1 or len(chunks) == 1:
        results = [guarded_chunk(blocks) for blocks in chunks]
    else:
        with ThreadPoolExecutor(max_workers=mc.workers) as executor:
            futures = [executor.submit(guarded_chunk, blocks) for blocks in chunks]
            results = [future.result() for future in futures]

    moments = _Moments()
    for partials in results:
        for partial in partials:
            moments.update(partial)

    if moments.count > 1:
        std_error = math.sqrt(moments.m2 / (moments.count - 1)) / math.sqrt(moments.count)
    else:
        std_error = 0.0
    return CapacityEstimate(
        mean_bits=moments.mean, std_error=std_error, samples_used=moments.count
    )
