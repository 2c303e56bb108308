import logging
from collections import defaultdict
from functools import lru_cache
from typing import Dict, List, Tuple

import gmpy2

from . import config
from .errors import DegenerateRadicand, FactoringBudgetExceeded


@lru_cache(maxsize=4)
def small_primes(bound: int) -> Tuple[int, ...]:
    primes = []
    p = gmpy2.mpz(2)
    while p <= bound:
        primes.append(p)
        p = gmpy2.next_prime(p)
    return tuple(primes)


def trial_division(n: int, bound: int) -> Tuple[Dict[int, int], int]:
    """ Strip every prime factor not exceeding ``bound``

    :param n: positive integer
    :param bound: largest trial divisor
    :return: (found prime factors with exponents, remaining cofactor)
    """
    n = gmpy2.mpz(n)
    factors = {}
    for p in small_primes(bound):
        if p * p > n:
            break
        if n % p == 0:
            n, k = gmpy2.remove(n, p)
            factors[int(p)] = int(k)
    return factors, n


def pollard_rho_brent(n: int, budget: List[int]) -> int:
    """ Nontrivial factor of the odd composite ``n`` by Brent's variant of Pollard's rho

    Deterministic: the polynomial constant runs through 1, 2, 3, ...
    ``budget[0]`` holds the iterations still allowed and is decremented in place.
    """
    n = gmpy2.mpz(n)
    batch = 128
    c = 0
    while True:
        c += 1
        y, r, q, g = gmpy2.mpz(2), 1, gmpy2.mpz(1), gmpy2.mpz(1)
        x = ys = y
        while g == 1:
            x = y
            if budget[0] < r:
                raise FactoringBudgetExceeded(int(n))
            budget[0] -= r
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(batch, r - k)
                if budget[0] < steps:
                    raise FactoringBudgetExceeded(int(n))
                budget[0] -= steps
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gmpy2.gcd(q, n)
                k += batch
            r *= 2
        if g == n:
            g = gmpy2.mpz(1)
            while g == 1:
                ys = (ys * ys + c) % n
                g = gmpy2.gcd(abs(x - ys), n)
        if g != n:
            return int(g)
        logging.getLogger(__name__).debug(f'rho cycle without split for c={c}, retrying')


def factorize(n: int, trial_bound: int = None, rho_iterations: int = None) -> Dict[int, int]:
    """ Prime factorization of ``|n|``

    Trial division up to ``trial_bound``, then primality test, perfect power detection and
    Pollard-Brent rho on the cofactor. Defaults come from the ``arithmetic`` config section.

    :raise FactoringBudgetExceeded: when rho runs out of iterations
    """
    if trial_bound is None:
        trial_bound = config.get_option('arithmetic', 'trial_division_bound')
    if rho_iterations is None:
        rho_iterations = config.get_option('arithmetic', 'rho_iterations')
    n = abs(int(n))
    assert n > 0, 'cannot factor zero'

    found, cofactor = trial_division(n, trial_bound)
    factors = defaultdict(int, found)
    budget = [rho_iterations]
    pending = [(cofactor, 1)]
    while pending:
        m, e = pending.pop()
        if m == 1:
            continue
        if gmpy2.is_prime(m):
            factors[int(m)] += e
            continue
        if gmpy2.is_power(m):
            for k in range(2, m.bit_length() + 1):
                root, exact = gmpy2.iroot(m, k)
                if exact:
                    pending.append((root, e * k))
                    break
            continue
        logging.getLogger(__name__).debug(f'splitting {m.bit_length()}-bit cofactor with rho')
        g = pollard_rho_brent(m, budget)
        pending.append((gmpy2.mpz(g), e))
        pending.append((m // g, e))
    return dict(sorted(factors.items()))


def squarefree_part(n: int, trial_bound: int = None, rho_iterations: int = None) -> Tuple[int, int]:
    """ Write ``n = s * f^2`` with ``s`` squarefree, sign carried by ``s``

    :return: (s, f) with f > 0
    """
    if n == 0:
        raise DegenerateRadicand('zero has no squarefree part')
    s, f = 1, 1
    for p, e in factorize(n, trial_bound, rho_iterations).items():
        if e % 2:
            s *= p
        f *= p ** (e // 2)
    return (-s if n < 0 else s), f
