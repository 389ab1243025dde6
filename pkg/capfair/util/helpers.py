import itertools as it
import json
import logging
import os

LOG_FORMAT = "%(levelname)s: %(asctime)s: %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def get_logger(name, path=None):
    """
    Gets a logger of name `name` that prints to stderr and, if `path` is set, to `path`.

    Calling it again with a new `path` adds a file handler for that path; the stream handler is only
    ever added once.
    """
    log = logging.getLogger(name)
    log.propagate = False
    log.setLevel(logging.DEBUG)

    formatter = logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT)
    has_stream = any(type(h) is logging.StreamHandler for h in log.handlers)
    file_paths = {h.baseFilename for h in log.handlers if isinstance(h, logging.FileHandler)}

    if path and os.path.abspath(path) not in file_paths:
        d = os.path.dirname(path)
        assert d == "" or os.path.exists(d), "Cannot write to %s from %s" % (path, os.getcwd())
        fh = logging.FileHandler(path)
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(formatter)
        log.addHandler(fh)

    if not has_stream:
        ch = logging.StreamHandler()
        ch.setLevel(logging.INFO)
        ch.setFormatter(formatter)
        log.addHandler(ch)

    return log


def detach_file_handlers(log):
    """Close and remove every file handler of `log`."""
    for h in list(log.handlers):
        if isinstance(h, logging.FileHandler):
            h.close()
            log.removeHandler(h)


def mkdir(path):
    if path and not os.path.exists(path):
        os.makedirs(path)


def duplicates(iterable):
    """
    return a list of duplicates

    >>> list(duplicates([3, 1, 3, 2, 1, 3]))
    [1, 3]
    """
    for x, group in it.groupby(sorted(iterable)):
        if len(list(group)) > 1:
            yield x


def dump_json(obj, fp):
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    json.dump(obj, fp, indent=2, sort_keys=True, ensure_ascii=False)
    fp.write("\n")


def split_words(value):
    """
    Splits a config value on commas and whitespace.

    >>> split_words("man, guy\\n boy")
    ['man', 'guy', 'boy']
    >>> split_words("")
    []
    """
    return [w for w in value.replace(",", " ").split() if w]
