"""Compare the compiled and pure-Python word kernels.

    python benchmarks/bench_words.py [--max-len 8] [--repeat 3]

Runs Whitehead minimization on every cyclically reduced word in F(x, y) up to
the given length with each available backend and checks that they agree.
"""
import argparse
import itertools
import time

from sfsurgery import _words_py

try:
    from sfsurgery import _words
except ImportError:
    _words = None


def words(max_len):
    for n in range(1, max_len + 1):
        for w in itertools.product((1, -1, 2, -2), repeat=n):
            if _words_py.cyclic_reduce(w) == w:
                yield w


def best_of(kernel, corpus, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [kernel.whitehead_minimize(w) for w in corpus]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    corpus = list(words(args.max_len))
    print(f"{len(corpus)} cyclically reduced words, length <= {args.max_len}")
    t_py, out_py = best_of(_words_py, corpus, args.repeat)
    print(f"python    {t_py:8.3f} s")
    if _words is None:
        print("compiled  unavailable (extension not built)")
        return
    t_c, out_c = best_of(_words, corpus, args.repeat)
    assert out_c == out_py, "backends disagree"
    print(f"compiled  {t_c:8.3f} s   speedup {t_py / t_c:5.1f}x")


if __name__ == "__main__":
    main()
