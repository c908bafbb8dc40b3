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

LOGGER_NAME = "kparallel"
FINEST = 5

DEBUG_FILE_NAME = "debug.log"
ERROR_FILE_NAME = "errors.log"
LOG_MAX_BYTES = 1048576
LOG_BACKUP_COUNT = 10

FILE_ENCODING = "UTF-8"

CERTIFICATE_FORMAT = "kparallel-certificate"
CERTIFICATE_VERSION = 1
CERTIFICATE_FILE_NAME_PATTERN = "{kind} q{q} n{n} k{k}.json"

# field elements are integers in [0, p^e)
MAX_FIELD_ORDER = 2 ** 16

# Grassmannian / transversal enumerations refuse to start above this count
MAX_ENUMERATION = 2_000_000

# exhaustive minimum rank check of a Gabidulin code
MRD_VERIFY_LIMIT = 2 ** 20
MAX_CODE_SIZE = 2 ** 20
RANK_BATCH = 4096

# exhaustive pairwise subspace distance check of a lifted code
PAIRWISE_VERIFY_LIMIT = 1024

DEFAULT_SEARCH_BUDGET = 10 ** 7

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
