# MIT License
#
# Copyright 2018-2019 IBM
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

DESCRIPTION = "Construct and verify families of pairwise disjoint spreads in finite Grassmannians, build {}"

EPILOG = """For example, `python -m kparallel construct --q 2 --k 3 --n 6` builds 7 pairwise
disjoint spreads of G_2(6,3), verifies them and writes a certificate that
`python -m kparallel verify FILE` re-checks from the file alone. Warnings and
errors are always written to the {} file in the working directory."""

PARAMETER_ERROR = """
These parameters are outside what the constructions support:
  {}
Run `python -m kparallel info --q Q --n N --k K` to see which parameters are admissible."""

VERIFICATION_FAILED = """
Verification FAILED. The failing checks and their counterexamples are listed
above. Check the {} and {} files in the working directory for more information."""

MALFORMED = """
The certificate could not be read:
  {}"""

BUDGET_EXHAUSTED = """
The node budget ran out before the search finished; the number above is a lower
bound. Run again with a larger --budget, or with --workers to split the search."""

UNEXPECTED = """
An unexpected error interrupted the run. Check the {} and {} files in the
working directory for more information."""
