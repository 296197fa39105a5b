"""Port interfaces (Protocols) between the domain and the outside world."""
