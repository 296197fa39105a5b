"""Domain layer: exact mathematics on fans, Cox rings and hypersurfaces, free of IO."""
