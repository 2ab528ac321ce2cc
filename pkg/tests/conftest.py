from hypothesis import settings

# Deterministic property runs: no wall-clock deadline (big-integer cases
# vary wildly in speed) and no example database in the repo.
settings.register_profile("repo", deadline=None, derandomize=True, database=None)
settings.load_profile("repo")
