"""Placeholder."""
Corner = None
ResponseMap = None
centrosymmetric_test = None
find_corners = None
hessian_response = None
