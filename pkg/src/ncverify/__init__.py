"""Exact symbolic verification of cubic algebra identities.

The package is organised in layers.  ``poly`` provides sparse rational
polynomials, ``rewrite`` the noncommutative rewriting engine on top of them.
``potential``, ``enveloping``, ``weyl``, ``heun`` and ``reps`` build the
algebraic objects under test, ``checks`` turns each verification into a
reproducible report, and ``service``/``cli`` expose the reports over HTTP
and the command line.
"""

__version__ = "0.1.0"
