from dataclasses import dataclass, fields

import numpy as np

from tripsep.helpers.linalg import freeze


@dataclass(frozen=True)
class ArrayModel:
    """Base model class: array fields are copied and made read-only."""

    def __post_init__(self):
        for field in fields(self):
            value = getattr(self, field.name)
            if isinstance(value, np.ndarray):
                object.__setattr__(self, field.name, freeze(value))
