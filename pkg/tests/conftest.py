from hypothesis import settings

settings.register_profile("deterministic", derandomize=True, max_examples=80)
settings.load_profile("deterministic")
