"""Clustered wireless-sensor-network routing simulator.

Thin Python front end over the C++ core: radio-model helpers, protocol
gates, single-run simulation and the CSV experiment runner.
"""

from ._wsnsim import (  # noqa: F401
    ConfigError,
    IoError,
    RadioParams,
    __version__,
    aggregate_cost,
    apteen_should_transmit,
    distance,
    leach_threshold,
    priya_classify,
    resolve_config,
    run_experiment,
    rx_cost,
    simulate,
    tdma_slots,
    teen_should_transmit,
    tx_cost,
    tx_delay,
)
