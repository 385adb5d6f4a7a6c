import time

import psutil  # memory measurement

from nmbu.maxclass.exceptional import ExceptionalParams, construct, theorem_exceptional_report
from nmbu.maxclass.polycheck import classify_admissible_k, lemma_pairs_check
from nmbu.maxclass.sequence import (AlphaSequence, constituents, jacobi_verify, project_type1, read_sequence_file,
                                    search_sequences)


def construct_exceptional():
    algebra = construct(ExceptionalParams(5, 2, 1, 2))
    print(algebra.sequence)
    print(constituents(algebra.sequence))


def exceptional_report():
    report = theorem_exceptional_report(ExceptionalParams(5, 2, 2, 4, mode="theorem"))
    print("ell: ", report["ell"])
    print("constituent lengths: ", report["constituent_lengths"])
    print("generating function: ", report["genfunc"])


def verify_file():
    seq = read_sequence_file("../tests/resources/exceptional_p5_m1_n2.json")
    print(jacobi_verify(seq))
    print(constituents(seq))


def classify_polynomials():
    for k, gs in classify_admissible_k(5, 3, 60):
        if gs:
            print(k, gs)
    print("lemma pairs: ", lemma_pairs_check(5, 50))


def project_and_search():
    q = 9
    alpha = AlphaSequence(3, [-1 if i % q == 0 and i >= 2 * q else 0 for i in range(2, 45)])
    beta = project_type1(alpha, 2)
    print(constituents(beta))
    print(search_sequences(3, 2, 16))
    print(search_sequences(3, 2, beta.depth + 2, seed=beta))


if __name__ == '__main__':
    start_time = time.time()  # program start time
    construct_exceptional()
    # exceptional_report()
    # verify_file()
    # classify_polynomials()
    # project_and_search()
    print("--- Executed in %s seconds ---" % int((time.time() - start_time)))  # program total execution time
    print("--- Memory used: %f MB ---" % (psutil.Process().memory_info().rss / (1024 * 1024)))  # memory usage
