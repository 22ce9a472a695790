"""Placeholder."""
ComponentResult = None
DetectionResult = None
DetectorConfig = None
decode_component = None
detect = None
sample_bits = None
