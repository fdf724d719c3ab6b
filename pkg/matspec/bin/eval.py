"""
Script for evaluating a single matrix special function and printing the
result in the shared JSON matrix encoding.

Matrices are given as JSON: {"dim": n, "entries": [[re, im], ...]}, a flat
list of [re, im] pairs, a nested list of rows or a single number.
Negative arguments must be passed as --z=-1.5,0
"""

import json
import logging
from argparse import ArgumentParser
import numpy as np
from matspec.errors import MatspecError, ParseError, UnknownFunction
from matspec.matrix.core import as_matrix, from_json, to_json
from matspec.special.gamma_beta import matrix_gamma, matrix_beta, pochhammer_term
from matspec.special.hyper import HyperParams, SeriesControl, eval_pFq
from matspec.special.bateman import BatemanParams, bateman_B, bateman_J, laguerre_L
from matspec.special.young import young_Y, bessel_J_matrix
from matspec.utils.scriptutils import add_logging_file_handler

logger = logging.getLogger(__name__)


def get_argparser():
    """
    Returns an argument parser for this script
    """
    parser = ArgumentParser(description='Evaluate a matrix special function. Available functions: '
                                        f'{", ".join(FUNCTIONS)}')
    parser.add_argument("function", type=str,
                        help="Name of the function to evaluate.")
    parser.add_argument("--params", type=str, default=None,
                        help="JSON object of parameters, e.g. '{\"n\": 2, \"a\": [[0.5]]}'. "
                             "Individual flags below override its fields.")
    parser.add_argument("--matrix", type=str, default=None,
                        help="JSON matrix argument of gamma and pochhammer.")
    parser.add_argument("--a", type=str, default=None,
                        help="JSON matrix A (Bateman, Young, Bessel, Laguerre, first beta argument).")
    parser.add_argument("--b", type=str, default=None,
                        help="JSON matrix B (Bateman, second beta argument).")
    parser.add_argument("--num", type=str, action="append", default=None,
                        help="JSON numerator matrix of pFq, repeat for each parameter.")
    parser.add_argument("--den", type=str, action="append", default=None,
                        help="JSON denominator matrix of pFq, repeat for each parameter.")
    parser.add_argument("--n", type=int, default=None,
                        help="Integer degree or order.")
    parser.add_argument("--z", type=str, default=None,
                        help="Complex argument 're,im' or real 're'.")
    parser.add_argument("--dim", type=int, default=None,
                        help="Matrix dimension used for scalar-only parameter lists.")
    parser.add_argument("--max_terms", type=int, default=500,
                        help="Largest number of series terms summed.")
    parser.add_argument("--overwrite", action="store_true",
                        help="Overwrite existing log files.")
    parser.add_argument("--log_file", type=str, default=None,
                        help="Relative path (from Defaults.LOG_DIR as specified by matspec --log_dir flag) of "
                             "output log file for this script. "
                             "Set to an empty string to not save any logs to file for this run. "
                             "Default is None (no log file)")
    return parser


def parse_complex(value):
    if isinstance(value, (int, float, complex)):
        return complex(value)
    parts = str(value).replace(" ", "").split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]))
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ParseError(f"Could not parse complex number from '{value}', expected 're,im' or 're'")


def _json(value, what):
    if not isinstance(value, str):
        return value
    try:
        return json.loads(value)
    except json.JSONDecodeError as e:
        raise ParseError(f"Argument {what} is not valid JSON: {value}") from e


def collect_params(args):
    """
    Merge --params with the individual flags into one dict of decoded values.
    """
    params = _json(args.params, "--params") if args.params else {}
    if not isinstance(params, dict):
        raise ParseError(f"--params must be a JSON object, got {args.params}")
    for key in ("matrix", "a", "b", "n", "z", "dim"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    for key in ("num", "den"):
        if getattr(args, key) is not None:
            params[key] = [_json(m, f"--{key}") for m in getattr(args, key)]
    decoded = {}
    for key, value in params.items():
        if key in ("matrix", "a", "b"):
            decoded[key] = from_json(_json(value, f"--{key}"))
        elif key in ("num", "den"):
            decoded[key] = [from_json(_json(m, f"--{key}")) for m in value]
        elif key == "z":
            decoded[key] = parse_complex(value)
        elif key in ("n", "dim"):
            decoded[key] = int(value)
        else:
            raise ParseError(f"Unknown parameter '{key}'")
    return decoded


def _require(params, *keys):
    missing = [k for k in keys if k not in params]
    if missing:
        raise ParseError(f"Missing parameter(s) {missing}")
    return [params[k] for k in keys]


def _real_positive(z, what):
    if z.imag != 0:
        raise ParseError(f"{what} takes a real argument, got {z}")
    return z.real


def _pfq(params, ctrl):
    z = params.get("z", 0j)
    hyper_params = HyperParams(tuple(params.get("num", ())), tuple(params.get("den", ())),
                               dim=params.get("dim"))
    result = eval_pFq(hyper_params, z, ctrl)
    return result.value, {"terms": result.n_terms, "tailBound": result.tail_bound, "label": hyper_params.label}


def _bateman_params(params):
    a = params.get("a", 0.0)
    b = params.get("b", 0.0)
    return BatemanParams(a, b)


def _bateman_b(params, ctrl):
    n, = _require(params, "n")
    return bateman_B(n, _bateman_params(params), params.get("z", 0j)), {"degree": n}


def _bateman_j(params, ctrl):
    n, z = _require(params, "n", "z")
    return bateman_J(n, _bateman_params(params), z), {"degree": n, "branch": "principal"}


def _young(params, ctrl):
    a, z = _require(params, "a", "z")
    return young_Y(a, _real_positive(z, "youngY"), ctrl), {}


def _bessel(params, ctrl):
    a, z = _require(params, "a", "z")
    return bessel_J_matrix(a, _real_positive(z, "besselJ"), ctrl), {}


def _gamma(params, ctrl):
    m, = _require(params, "matrix")
    return matrix_gamma(m), {}


def _beta(params, ctrl):
    a, b = _require(params, "a", "b")
    return matrix_beta(a, b), {}


def _pochhammer(params, ctrl):
    m, n = _require(params, "matrix", "n")
    if n < 0:
        raise ParseError(f"Pochhammer order must be non-negative, got {n}")
    return pochhammer_term(m, n), {"order": n}


def _laguerre(params, ctrl):
    n, z = _require(params, "n", "z")
    return laguerre_L(n, params.get("a", 0.0), z), {"degree": n}


FUNCTIONS = {
    "pFq": _pfq,
    "batemanB": _bateman_b,
    "batemanJ": _bateman_j,
    "youngY": _young,
    "besselJ": _bessel,
    "gamma": _gamma,
    "beta": _beta,
    "pochhammer": _pochhammer,
    "laguerreL": _laguerre,
}


def evaluate(function, params, ctrl=None):
    """
    Evaluate a registered function.

    Args:
        function: (string)        One of FUNCTIONS
        params:   (dict)          Decoded parameters (see collect_params)
        ctrl:     (SeriesControl) Series truncation control

    Returns:
        A dict with the function name, the encoded matrix value and metadata
    """
    if function not in FUNCTIONS:
        raise UnknownFunction(f"Unknown function '{function}'. Available: {', '.join(FUNCTIONS)}")
    value, meta = FUNCTIONS[function](params, ctrl or SeriesControl())
    value = as_matrix(np.asarray(value))
    return {"function": function, "value": to_json(value), "meta": meta}


def run(args):
    """
    Run this script with the specified args. See argparser for details.
    Returns the exit code.
    """
    add_logging_file_handler(args.log_file, args.overwrite, mode="w")
    try:
        result = evaluate(args.function, collect_params(args), SeriesControl(max_terms=args.max_terms))
    except UnknownFunction as e:
        logger.error(e.args[0])
        return 2
    except (MatspecError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 1
    print(json.dumps(result, sort_keys=True))
    return 0


def entry_func(args=None):
    # Parse arguments
    parser = get_argparser()
    raise SystemExit(run(parser.parse_args(args)))


if __name__ == "__main__":
    entry_func()
