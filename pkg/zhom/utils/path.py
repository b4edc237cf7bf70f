import pathlib


def get_package_path() -> pathlib.Path:
    return pathlib.Path(__file__).parent.parent.parent


DIR_ROOT = get_package_path()
DIR_CONFIGS = DIR_ROOT / "configs"


class FileUtils:
    @staticmethod
    def read_text(file_path: pathlib.Path | str) -> str:
        """Read a UTF-8 text file, raising FileNotFoundError with the path if missing."""
        if isinstance(file_path, str):
            file_path = pathlib.Path(file_path)
        if not file_path.exists():
            raise FileNotFoundError(f"File {file_path} does not exist")
        return file_path.read_text(encoding="utf-8")

    @staticmethod
    def write_text(file_path: pathlib.Path | str, content: str) -> pathlib.Path:
        if isinstance(file_path, str):
            file_path = pathlib.Path(file_path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_path.write_text(content, encoding="utf-8")
        return file_path
