__all__ = ["paper_demo"]
