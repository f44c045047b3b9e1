from src.election import TemporalElection


def build_election(candidates, table):
    """Election from a round-major table: table[r][i] lists the names voter i approves in round r."""
    candidates = tuple(candidates)
    n, ell = len(table[0]), len(table)
    approvals = tuple(
        tuple(frozenset(candidates.index(name) for name in table[r][i]) for r in range(ell))
        for i in range(n)
    )
    return TemporalElection(candidates, n, ell, approvals)
