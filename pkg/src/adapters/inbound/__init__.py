# Inbound adapters package
