"""schurlab

Shifted Schur measures and their relatives, each exact formula paired with
an independent oracle.

## Packages

- series: windowed Laurent series and certified tail bounds
- partitions: strict partitions, shifted shapes and tableau counts
- schurq: Schur Q-functions, pfaffians and specializations
- correlation: the pfaffian correlation kernel of the shifted Schur measure
- plancherel: the shifted Plancherel measure and longest ascent pairs
- airy: Airy functions, the Airy kernel and Tracy-Widom F2
- halllittlewood: Hall-Littlewood polynomials and measure moments
- lab: experiments, configuration and the command-line driver
- apps: the JSON API
- common: errors, schema, validation, environment and table helpers
"""
