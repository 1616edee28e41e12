"""
Additive Spectrum - :mod:`addspec`
==================================

Exact computation of the r-value

    r(S) = |{(x, y) in S x S : x + y in S}|

of sets of positive integers, of the spectrum ``R(s, N)`` of r-values taken
by the s-subsets of ``[1, N]``, and exhaustive verification of the known
statements about both.

There are two ways to interact with this package.

    - From a python script through :mod:`addspec.core`,
      :mod:`addspec.spectrum` and :mod:`addspec.verify`

    - From the command line by calling ``python -m addspec`` (or the
      ``addspec`` console script)


Usage Example
-------------

1. Compute a spectrum

.. code-block:: console

    python -m addspec spectrum --s 4 --N 6
    R(4,6) = {1,3,4,5,6}; f=1 g=6; exceptions={2}


2. Verify a statement over a range of set sizes and keep the report

.. code-block:: console

    python -m addspec verify --statement thm4.7 --s 4..8 \
        --format json --out runs.jsonl --append


3. Work with sets from Python

.. code-block::

    from addspec.core import IntSet, r_value
    from addspec.spectrum import enumerate_spectrum

    r_value(IntSet.parse("1,3,4,5,7"))   # 6
    enumerate_spectrum(4, 6).exceptions  # (2,)

4. Read stored records back

.. code-block::

    from addspec.records import RecordLog

    log = RecordLog('runs_1.jsonl', 'runs_2.jsonl')
    log.get('verify')


Important Notes
---------------

- Enumeration is exhaustive. Every scan is checked against a budget
  (``--budget``, default ``10**9`` subsets) before it starts.

- Results do not depend on ``--workers``: set lists are returned in
  lexicographic order whatever the split of the work.

- Settings can also come from ``addspec.toml`` or ``ADDSPEC_*`` environment
  variables, see :mod:`addspec.config`.
"""

__version__ = "0.1.0"
