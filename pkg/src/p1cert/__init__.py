"""Validated numerics for the Painleve I tritronquee solution.

The package has two layers:

* a *certificate* layer (`numerics`, `polybound`, `formal`, `functionals`,
  `certificates`, `inner`) that runs entirely on exact rational interval
  arithmetic and machine-checks every inequality in the pole-free-region
  argument, and
* an *evaluation* layer (`evaluator`) that computes the tritronquee and its
  derivative to high precision with tracked (non-certified) error estimates.

Use the ``p1cert`` command line tool or import the modules directly.
"""

from .numerics import Interval, Rational

__all__ = ["Interval", "Rational"]
__version__ = "0.1.0"
