"""Compensated accumulation for deterministic float reductions.

Sweeps reduce per-denominator contributions in a fixed ascending order;
Neumaier compensation keeps the result independent of how the work was
chunked across threads.
"""


class CompensatedSum:
    """Neumaier-compensated running sum of complex values."""

    __slots__ = ("_re", "_im", "_cre", "_cim")

    def __init__(self):
        self._re = 0.0
        self._im = 0.0
        self._cre = 0.0
        self._cim = 0.0

    @staticmethod
    def _step(s, comp, x):
        t = s + x
        if abs(s) >= abs(x):
            comp += (s - t) + x
        else:
            comp += (x - t) + s
        return t, comp

    def add(self, z):
        z = complex(z)
        self._re, self._cre = self._step(self._re, self._cre, z.real)
        self._im, self._cim = self._step(self._im, self._cim, z.imag)

    @property
    def value(self):
        return complex(self._re + self._cre, self._im + self._cim)
