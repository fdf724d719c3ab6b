import logging
import os
import psutil

logger = logging.getLogger(__name__)


def ensure_list_or_tuple(obj):
    return obj if isinstance(obj, (list, tuple)) else [obj]


def create_folders(folders, create_deep=False):
    """
    Create each folder in 'folders' that does not exist yet. None entries are skipped.
    """
    make_func = os.makedirs if create_deep else os.mkdir
    for folder in ensure_list_or_tuple(folders):
        if folder is None or os.path.exists(folder):
            continue
        try:
            make_func(folder)
        except FileExistsError:
            # Another worker created it
            pass


def highlighted(string):
    """ Frame a (possibly multi-line) string with dashed lines of its width """
    border = "-" * max(len(line) for line in string.split("\n"))
    return f"{border}\n{string}\n{border}"


def parse_int_list(value):
    """
    '1,2,3' or '1 2 3' or [1, 2, 3] -> [1, 2, 3]
    """
    if isinstance(value, str):
        value = value.replace(",", " ").split()
    return [int(v) for v in ensure_list_or_tuple(value)]


def default_num_workers():
    """ Physical core count, 1 if psutil cannot tell """
    return psutil.cpu_count(logical=False) or 1
