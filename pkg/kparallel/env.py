# MIT License
#
# Copyright 2019 IBM
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

from kparallel import constants

import logging
import logging.handlers
from enum import Enum
from tqdm import tqdm
from pathlib import Path

import kparallel


class LogLevel(Enum):
    none = "NONE"
    finest = "FINEST"
    debug = "DEBUG"
    info = "INFO"
    warn = "WARN"
    error = "ERROR"

    def __str__(self):
        return self.value


work_root = Path.home() / "kparallel"
show_progress = False

build_info = kparallel.__version__


def progress_bar(iterable=None, desc=None, position=0, unit="", initial=0, total=None):
    return tqdm(iterable, desc=desc, position=position, unit=unit, initial=initial, total=total,
                leave=False if position > 0 else True, ncols=75, disable=not show_progress)


def add_work_root_args(parser):
    parser.add_argument("--dir", default=work_root, help="Working directory for logs and default certificate output. This directory will be created if it doesn't exist.")


def add_logger_args(parser):
    logging_group = parser.add_argument_group("logging")
    logging_group.add_argument(
        "--loglevel", type=LogLevel, default=LogLevel.info, choices=list(LogLevel), help="Messages of this type will be printed to a {} file in the working directory. Regardless, errors and warnings are ALWAYS printed to a separate {}.".format(constants.DEBUG_FILE_NAME, constants.ERROR_FILE_NAME))
    logging_group.add_argument("--quiet", action="store_true", help="Do not show progress bars.")


def config_work_root(args):
    global work_root
    work_root = Path(args.dir)
    work_root.mkdir(exist_ok=True, parents=True)


def config_logger(args, logger_name=constants.LOGGER_NAME):
    global show_progress
    show_progress = not args.quiet

    logger = logging.getLogger(logger_name)
    # set to the the finest level on the top level logger - the actual LogLevel
    # is controlled by the handlers
    logging.addLevelName(constants.FINEST, "FINEST")
    logger.setLevel(constants.FINEST)
    # configuring again replaces the handlers of an earlier run
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    default_formatter = logging.Formatter(
        "%(asctime)s %(name)s %(levelname)-8s: %(message)s")

    # error log
    error_log_handler = logging.handlers.RotatingFileHandler(
        work_root / constants.ERROR_FILE_NAME,
        maxBytes=constants.LOG_MAX_BYTES,
        backupCount=constants.LOG_BACKUP_COUNT,
        encoding=constants.FILE_ENCODING)
    error_log_handler.setFormatter(default_formatter)
    error_log_handler.setLevel(logging.WARN)
    logger.addHandler(error_log_handler)

    # optional debug log
    if args.loglevel and args.loglevel != LogLevel.none:
        file_log_handler = logging.handlers.RotatingFileHandler(
            work_root / constants.DEBUG_FILE_NAME,
            maxBytes=constants.LOG_MAX_BYTES,
            backupCount=constants.LOG_BACKUP_COUNT,
            encoding=constants.FILE_ENCODING)
        file_log_handler.setFormatter(default_formatter)
        file_log_handler.setLevel(str(args.loglevel))
        logger.addHandler(file_log_handler)
    return logger


def get_certificate_path(kind: str, q: int, n: int, k: int) -> Path:
    return work_root / constants.CERTIFICATE_FILE_NAME_PATTERN.format(kind=kind, q=q, n=n, k=k)
