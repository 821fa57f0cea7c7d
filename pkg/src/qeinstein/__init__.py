"""Verification engine for m-quasi Einstein metrics on the model
3-geometries."""
