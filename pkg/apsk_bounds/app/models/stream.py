from dataclasses import dataclass, replace
from gettext import gettext as _
from typing import Tuple

import numpy as np


UINT64_LIMIT = 2 ** 64


@dataclass(frozen=True)
class RandomStreamSpec:
    """
    A reproducible, splittable random stream.

    The stream is a value: it names a position in the key space of a counter-based
    generator (Philox) and can be handed to any worker. Children extend the key path, so
    a parent and all of its children are statistically independent of each other.
    """

    seed: int
    stream_id: int = 0
    path: Tuple[int, ...] = ()

    def __post_init__(self):
        """Validate the key fields."""
        for name, value in [("seed", self.seed), ("stream_id", self.stream_id)] + [
            ("path", key) for key in self.path
        ]:
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(_("Stream {} must be an integer, got {!r}.").format(name, value))
            if not 0 <= int(value) < UINT64_LIMIT:
                raise ValueError(
                    _("Stream {} must be an unsigned 64 bit integer, got {}.").format(name, value)
                )

    def child(self, *keys):
        """
        Derive an independent substream.

        Args:
            keys (int): Keys appended to the path of this stream.

        Returns:
            RandomStreamSpec: The substream.

        """
        return replace(self, path=self.path + tuple(int(key) for key in keys))

    def seed_sequence(self):
        """The numpy SeedSequence this stream hashes to."""
        return np.random.SeedSequence(
            entropy=int(self.seed), spawn_key=(int(self.stream_id),) + tuple(self.path)
        )

    def generator(self):
        """
        Create a fresh generator positioned at the start of this stream.
        """
        return np.random.Generator(np.random.Philox(self.seed_sequence()))

    def to_dict(self):
        """Plain representation for run manifests."""
        return {"seed": int(self.seed), "stream_id": int(self.stream_id), "path": list(self.path)}
