"""Utils package for TraceHankel parsers."""
