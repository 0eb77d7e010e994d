"""isotropic_poly Tests."""
