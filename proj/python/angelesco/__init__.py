"""Python access to the angelesco core.

Rational parameters may be given as int, str ("1/2", "0.7") or float; floats
go through repr, so 0.7 means 7/10.
"""

import json
from fractions import Fraction

from . import _angelesco
from ._angelesco import DomainError, Error, UsageError, ValidationError

__all__ = [
    "run", "pnn_at_zero", "mop_coefficients", "q_eval", "cj_constant",
    "curve", "mehler_heine", "model_check",
    "Error", "ValidationError", "DomainError", "UsageError",
]


def _q(x):
    return x if isinstance(x, str) else repr(x)


def run(*args):
    """Run a CLI subcommand, e.g. run("curve", "--a", "-2"), and return the report dict."""
    return json.loads(_angelesco.run([str(a) for a in args]))


def pnn_at_zero(n, a, alpha=0, beta=0, gamma=0):
    return Fraction(_angelesco.pnn_at_zero(n, _q(a), _q(alpha), _q(beta), _q(gamma)))


def mop_coefficients(n1, n2, a, alpha=0, beta=0, gamma=0, digits=160):
    return _angelesco.mop_coefficients(n1, n2, _q(a), _q(alpha), _q(beta), _q(gamma), digits)


def q_eval(z, tau=0, beta=0, digits=50):
    return _angelesco.q_eval(complex(z), _q(tau), _q(beta), digits)


def cj_constant(j, alpha=0, beta=0, gamma=0, digits=50):
    return _angelesco.cj_constant(j, _q(alpha), _q(beta), _q(gamma), digits)


def curve(a, digits=50):
    return run("curve", "--a", _q(a), "--digits", digits)["data"]


def mehler_heine(z=0, tau=0, ladder=(16, 64, 256), digits=50):
    z = complex(z)
    return run("mehler-heine", "--z", f"{z.real!r},{z.imag!r}", "--tau", _q(tau),
               "--ladder", ",".join(map(str, ladder)), "--digits", digits)


def model_check(beta=0, tau=0, digits=50):
    return run("model-check", "--beta", _q(beta), "--tau", _q(tau), "--digits", digits)
