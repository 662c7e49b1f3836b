"""Time the numba kernels against their numpy fallbacks.

Usage::

    python benchmarks/bench_kernels.py [--repeat N]

The workloads are the ones the package actually runs: RREF of the F_64
constraint matrix for the n = 63 code, table products over F_2, codeword
enumeration for an F_8 parent and minimum weight over the result.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from grssub import kernels
from grssub._accel import NUMBA_INSTALLED
from grssub.extension import ExtensionCtx
from grssub.extract import assemble_constraint_matrix
from grssub.grscode import cyclic_grs
from grssub.oracle import TableField, grs_generator_indices
from grssub.smallfield import gf


def workloads():
    F2 = gf(2)
    F64 = ExtensionCtx(F2, [1, 1, 0, 0, 0, 0, 1])
    M = assemble_constraint_matrix(cyclic_grs(F64, 63, 51, 0)).T.copy()
    F8 = ExtensionCtx(F2, [1, 1, 0, 1])
    tf = TableField(F8)
    G = grs_generator_indices(cyclic_grs(F8, 7, 6, 0), tf)
    rng = np.random.default_rng(0)
    A = rng.integers(0, 2, size=(300, 300)).astype(np.uint8)
    B = rng.integers(0, 2, size=(300, 300)).astype(np.uint8)
    words = kernels.span_numpy(G, tf.add_table, tf.mul_table, tf.q)
    tables = (F2.add_table, F2.mul_table, F2.inv_table, F2.neg_table)
    return {
        "rref 315x306 over F_2": ("rref", (M, *tables)),
        "matmul 300x300 over F_2": ("matmul", (A, B, F2.add_table, F2.mul_table)),
        "span 8^6 words, n=7": ("span", (G, tf.add_table, tf.mul_table, tf.q)),
        "min_weight 8^6 words": ("min_weight", (words,)),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    if not NUMBA_INSTALLED:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'workload':28s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for label, (name, call_args) in workloads().items():
        fast, slow = kernels.NUMBA_KERNELS[name], kernels.NUMPY_KERNELS[name]
        a, b = fast(*call_args), slow(*call_args)  # also warms the jit cache
        same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) else np.array_equal(a, b)
        if not same:
            raise SystemExit(f"{label}: backends disagree")
        t_np = min(timeit.repeat(lambda: slow(*call_args), number=1, repeat=args.repeat)) * 1e3
        t_nb = min(timeit.repeat(lambda: fast(*call_args), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:28s} {t_np:10.2f} {t_nb:10.2f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
