VERSION_PATTERN = r'^__version__ = [\'"]([^\'"]*)[\'"]'
