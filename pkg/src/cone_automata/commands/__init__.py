"""CLI verbs; each module exposes ``register(subparsers)``.

A registered parser sets ``handler(args, params) -> exit code``;
``takes_params`` marks verbs that accept ``--key value`` construction
parameters.
"""
