"""Adapters implementing the driven and driving ports."""
