"""Tests for fif_wavelet package modules."""
