from hypothesis import settings

# exact arithmetic is slow per example; cap examples and drop the deadline
settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")
