"""Intersecting two submonoids.

The intersection of H = X* and K = Y* is read off the trimmed product of
their automata. Reduced ranks may exceed the product of the factors'
reduced ranks, but never the bound with the correction term added.
"""

from semiflower import GeneratorSet, analyze
from semiflower.io import format_hnp_report


def show(h, k):
    r = analyze(GeneratorSet("ab", frozenset(h)), GeneratorSet("ab", frozenset(k)))
    print(format_hnp_report(r))


show({"a", "ba"}, {"ab", "b"})         # trivial intersection
show({"ab", "ba"}, {"a", "b"})         # K is everything, so H and K meet in H
show({"aa", "ab"}, {"a"})              # one factor without a branch point
show({"a", "ba", "bba"}, {"b", "aa", "aba"})  # the plain inequality fails here
show({"a", "ba"}, {"aa", "ab"})        # product has a cycle avoiding the root
