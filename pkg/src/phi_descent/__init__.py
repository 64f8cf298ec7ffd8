"""Deciding that c*y^l = (x^p - 1)/(x - 1) has no integer solutions."""

from .criteria import Criterion, LocalReport, Status, Verdict, criterion_i, criterion_ii, criterion_iii, local_solvability, verdict
from .gauss import EquationInstance, GaussPair, descend, eval_pair, f_series, gauss_pair, pair_gcd
from .ntheory import InvalidTriple, Triple, eval_phi, is_perfect_lth_power, is_prime, jacobi, sqrt_mod_prime
from .quadforms import ClassGroup, QuadForm, class_group, compose, is_equivalent, is_lth_power_class, prime_form, reduce
from .search import SolutionRecord, mod_q_proper_solutions, search_solutions

__version__ = "0.1.0"
