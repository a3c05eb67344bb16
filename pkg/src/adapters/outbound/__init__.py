# Outbound adapters package
