from .registry import (IdentityEntry, IdentityCheckReport, EvalContext, TOLERANCE_CLASSES,
                       run_identity, run_catalog, select_entries, check_unique_ids)
from .hyper import hyper_catalog
from .transform import transform_catalog
from .bateman import bateman_catalog
from .young import young_catalog


def full_catalog():
    """ All registered identity entries, sorted by id """
    entries = hyper_catalog() + transform_catalog() + bateman_catalog() + young_catalog()
    return select_entries(check_unique_ids(entries))
