"""Shared fixtures and independent closed-form oracles.

The oracles below use only ``math`` and the textbook linear-domain radar,
Friis and noise formulas; they never call into ``ewlink``.
"""

import math

import pytest

C = 299_792_458.0
K_B = 1.380649e-23


def radar_power_linear_w(p_w, g_tx_lin, g_rx_lin, rcs, freq_hz, range_m):
    lam = C / freq_hz
    return p_w * g_tx_lin * g_rx_lin * rcs * lam**2 / ((4 * math.pi) ** 3 * range_m**4)


def one_way_power_linear_w(p_w, g_tx_lin, g_rx_lin, freq_hz, range_m):
    lam = C / freq_hz
    return p_w * g_tx_lin * g_rx_lin * (lam / (4 * math.pi * range_m)) ** 2


def db(x):
    return 10 * math.log10(x)


# reference scenario, in linear units
T1_POWER_W = 24_600.0
T1_FREQ_HZ = 1.3e9
T1_GAIN_LIN = 4 * math.pi / (math.radians(0.18) * math.radians(20.0))
T1_NOISE_DBW = db(K_B * 290 * 100e6) + 5 + 10
T1_JAM_W = 6_800.0
T1_JAM_GAIN_LIN = 10 ** (22.63 / 10)
T1_BW_RATIO = 100e6 / 1e9


@pytest.fixture
def table1():
    from ewlink.scenario import table1_scenario

    return table1_scenario()


@pytest.fixture
def table1_faithful():
    from ewlink.scenario import table1_scenario

    return table1_scenario(include_tx_gain=True)
