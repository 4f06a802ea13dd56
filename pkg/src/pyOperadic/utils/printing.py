"""
Logging and human-readable rendering for pyOperadic objects.
"""

import sys as _sys
import time as _time

from pyOperadic.exactlin.scalars import format_scalar

_VERBOSE = False


def set_verbose(flag: bool = True):
    global _VERBOSE
    _VERBOSE = bool(flag)


def is_verbose() -> bool:
    return _VERBOSE


def logger(*args, **kwargs):
    """Timestamped progress message on stderr; silent unless verbose mode is on."""
    if not _VERBOSE and not kwargs.pop("force", False):
        return
    kwargs.pop("force", None)
    end = kwargs.pop("end", "\n")
    _sys.stderr.write("[{}] {}{}".format(_time.strftime("%H:%M:%S"), " ".join(map(str, args)), end))
    _sys.stderr.flush()


def format_vector(v) -> str:
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


def format_labelled(labels, v) -> str:
    """Render a coordinate vector as a linear combination of labels, e.g. "≺ + 1/2 ≻"."""
    terms = []
    for label, c in zip(labels, v):
        if c == 0:
            continue
        if c == 1:
            terms.append(label)
        elif c == -1:
            terms.append("-" + label)
        else:
            terms.append("{} {}".format(format_scalar(c), label))
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def format_tensor_side(labels, m) -> str:
    """Render an n x n coefficient matrix as a sum of a⊗b terms."""
    terms = []
    n = len(labels)
    for s in range(n):
        for t in range(n):
            c = m[s, t]
            if c == 0:
                continue
            term = "{}⊗{}".format(labels[s], labels[t])
            if c == 1:
                terms.append(term)
            elif c == -1:
                terms.append("-" + term)
            else:
                terms.append("{} {}".format(format_scalar(c), term))
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")
