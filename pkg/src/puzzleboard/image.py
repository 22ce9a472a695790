"""Placeholder."""
GrayImage = None
read_image = None
write_image = None
