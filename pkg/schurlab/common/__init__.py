"""schurlab.common

Shared building blocks for the lab: error types, parameter schemas,
validation, environment handling and numeric formatting helpers.
"""
