from .utils import ensure_list_or_tuple, create_folders, highlighted, parse_int_list, default_num_workers
