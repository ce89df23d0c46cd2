"""File manager for writing command output to disk."""
import logging
import os
from typing import Tuple

# Module logger
logger = logging.getLogger(__name__)


class FileManager:
    """Handles all file operations for report output"""

    @staticmethod
    def normalize_newlines(text: str) -> str:
        """Force LF line endings and a single trailing newline"""
        text = text.replace('\r\n', '\n').replace('\r', '\n')
        if text and not text.endswith('\n'):
            text += '\n'
        return text

    @staticmethod
    def ensure_parent_folder(file_path: str) -> str:
        """Create the folder that will hold file_path if needed"""
        folder = os.path.dirname(os.path.abspath(file_path))
        os.makedirs(folder, exist_ok=True)
        return folder

    @staticmethod
    def write_text(file_path: str, text: str) -> Tuple[bool, str]:
        """
        Write UTF-8 text with LF line endings, replacing the file atomically
        Returns: (success, error_message)
        """
        if not file_path:
            return False, "No output file given"
        temp_path = f"{file_path}.part"
        try:
            FileManager.ensure_parent_folder(file_path)
            with open(temp_path, 'w', encoding='utf-8', newline='\n') as f:
                f.write(FileManager.normalize_newlines(text))
            os.replace(temp_path, file_path)
            logger.info("Wrote %s", file_path)
            return True, ""
        except OSError as e:
            logger.exception("Error writing output file: %s", file_path)
            FileManager.remove_file(temp_path)
            return False, f"Error writing {file_path}: {e}"

    @staticmethod
    def remove_file(file_path: str) -> bool:
        """Delete file_path if present; returns whether it is gone"""
        try:
            if os.path.exists(file_path):
                os.remove(file_path)
            return True
        except OSError as e:
            logger.warning("Could not remove %s: %s", file_path, e)
            return False
