"""Quantum emitters coupled to a dissipative Su-Schrieffer-Heeger photonic lattice."""
