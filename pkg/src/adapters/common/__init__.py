# Common adapters package
